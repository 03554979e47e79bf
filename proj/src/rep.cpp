#include "rep.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace cu2 {

namespace {

constexpr double kDropTolerance = 1e-15;

std::complex<double> to_complex(const Scalar& c) {
  return {c.re.get_d(), c.im.get_d()};
}

void check_letter(int letter) {
  if (letter != 1 && letter != 2) {
    throw std::invalid_argument("letter must be 1 or 2");
  }
}

void check_index(std::uint64_t n) {
  if (n == 0) {
    throw std::invalid_argument("sequence indices start at 1");
  }
}

}  // namespace

SparseVector SparseVector::basis(std::uint64_t n) {
  check_index(n);
  SparseVector x;
  x.add(n, 1.0);
  return x;
}

void SparseVector::add(std::uint64_t index, std::complex<double> value) {
  check_index(index);
  auto [it, inserted] = entries_.try_emplace(index, value);
  if (!inserted) {
    it->second += value;
  }
  if (std::abs(it->second) <= kDropTolerance) {
    entries_.erase(it);
  }
}

SparseVector SparseVector::operator+(const SparseVector& o) const {
  SparseVector out = *this;
  for (const auto& [n, v] : o.entries_) {
    out.add(n, v);
  }
  return out;
}

SparseVector SparseVector::operator-(const SparseVector& o) const {
  SparseVector out = *this;
  for (const auto& [n, v] : o.entries_) {
    out.add(n, -v);
  }
  return out;
}

SparseVector apply_A(int letter, const SparseVector& x) {
  check_letter(letter);
  SparseVector out;
  for (const auto& [n, v] : x.entries()) {
    const std::uint64_t m = n + static_cast<std::uint64_t>(letter) - 1;
    if (m % 2 == 0) {
      out.add(m / 2, v);
    }
  }
  return out;
}

SparseVector apply_B(int letter, const SparseVector& x) {
  check_letter(letter);
  SparseVector out;
  for (const auto& [n, v] : x.entries()) {
    out.add(2 * n - static_cast<std::uint64_t>(letter) + 1, v);
  }
  return out;
}

mpq_class rho(const Word& i, std::uint64_t n) {
  check_index(n);
  const int alpha = static_cast<int>(i.size());
  mpq_class q(mpz_class(static_cast<unsigned long>(n)) + theta(i), mpz_class(1) << alpha);
  q.canonicalize();
  return q;
}

std::optional<std::uint64_t> rho_index(const Word& i, std::uint64_t n) {
  check_index(n);
  const int alpha = static_cast<int>(i.size());
  if (alpha == 0) {
    return n;
  }
  if (n > (std::uint64_t{1} << 62)) {
    throw std::overflow_error("rho_index: index too large");
  }
  // rho(i, n) = (n + theta(i)) / 2^alpha
  const std::uint64_t numerator = n + static_cast<std::uint64_t>(theta(i));
  const std::uint64_t mask = (std::uint64_t{1} << alpha) - 1;
  if ((numerator & mask) != 0) {
    return std::nullopt;
  }
  const std::uint64_t index = numerator >> alpha;
  if (index == 0) {
    return std::nullopt;
  }
  return index;
}

std::uint64_t sigma(const Word& i, std::uint64_t n) {
  check_index(n);
  const int alpha = static_cast<int>(i.size());
  if (alpha == 0) {
    return n;
  }
  if (alpha > 62 || n > (std::uint64_t{1} << (62 - alpha))) {
    throw std::overflow_error("sigma: index overflow");
  }
  // sigma(i, n) = 2^alpha * n - theta(i)
  return (n << alpha) - static_cast<std::uint64_t>(theta(i));
}

SparseVector apply_A_star_word(const Word& j, const SparseVector& x) {
  SparseVector out;
  for (const auto& [n, v] : x.entries()) {
    if (auto r = rho_index(j, n)) {
      out.add(*r, v);
    }
  }
  return out;
}

SparseVector apply_B_word(const Word& i, const SparseVector& x) {
  SparseVector out;
  for (const auto& [n, v] : x.entries()) {
    out.add(sigma(i, n), v);
  }
  return out;
}

SparseVector apply_element(const AlgElement& f, const SparseVector& x,
                           const RepConfig&) {
  SparseVector out;
  for (const auto& [t, c] : f.terms()) {
    const std::complex<double> cc = to_complex(c);
    for (const auto& [n, v] : x.entries()) {
      if (auto r = rho_index(t.right(), n)) {
        out.add(sigma(t.left(), *r), cc * v);
      }
    }
  }
  return out;
}

double lp_norm(const SparseVector& x, const RepConfig& cfg) {
  if (!(cfg.p >= 1.0) || !std::isfinite(cfg.p)) {
    throw std::invalid_argument("lp_norm: p must be a finite value >= 1");
  }
  if (cfg.p == 1.0) {
    double sum = 0.0;
    for (const auto& [n, v] : x.entries()) {
      sum += std::abs(v);
    }
    return sum;
  }
  if (cfg.p == 2.0) {
    double sum = 0.0;
    for (const auto& [n, v] : x.entries()) {
      sum += std::norm(v);
    }
    return std::sqrt(sum);
  }
  double sum = 0.0;
  for (const auto& [n, v] : x.entries()) {
    sum += std::pow(std::abs(v), cfg.p);
  }
  return std::pow(sum, 1.0 / cfg.p);
}

namespace {

bool exactly_equal(const SparseVector& a, const SparseVector& b) {
  return a.entries() == b.entries();
}

}  // namespace

Report check_relations(std::uint64_t N, const RepConfig&) {
  if (N < 1) {
    throw std::invalid_argument("check_relations: N must be at least 1");
  }
  Report report;
  const std::string range = "n<=" + std::to_string(N);
  struct Relation {
    std::string name;
    std::function<SparseVector(const SparseVector&)> op;
    bool expect_identity;  // otherwise expect zero
  };
  const std::vector<Relation> relations = {
      {"A1B1=I", [](const SparseVector& e) { return apply_A(1, apply_B(1, e)); }, true},
      {"A2B2=I", [](const SparseVector& e) { return apply_A(2, apply_B(2, e)); }, true},
      {"A1B2=0", [](const SparseVector& e) { return apply_A(1, apply_B(2, e)); }, false},
      {"A2B1=0", [](const SparseVector& e) { return apply_A(2, apply_B(1, e)); }, false},
      {"B1A1+B2A2=I",
       [](const SparseVector& e) {
         return apply_B(1, apply_A(1, e)) + apply_B(2, apply_A(2, e));
       },
       true},
  };
  for (const Relation& rel : relations) {
    CheckResult check{rel.name, range, true, std::nullopt, std::nullopt};
    for (std::uint64_t n = 1; n <= N; ++n) {
      const SparseVector e = SparseVector::basis(n);
      const SparseVector got = rel.op(e);
      const bool ok = rel.expect_identity ? exactly_equal(got, e) : got.is_zero();
      if (!ok) {
        check.passed = false;
        check.counterexample = "n=" + std::to_string(n);
        break;
      }
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

Report partition_norm_check(const SparseVector& x, int alpha, const RepConfig& cfg) {
  if (alpha < 0) {
    throw std::invalid_argument("partition_norm_check: negative alpha");
  }
  const double whole = std::pow(lp_norm(x, cfg), cfg.p);
  double parts = 0.0;
  for (const Word& k : enumerate_words(alpha)) {
    parts += std::pow(lp_norm(apply_A_star_word(k, x), cfg), cfg.p);
  }
  Report report;
  CheckResult check{"partition_norm", "alpha=" + std::to_string(alpha),
                    std::abs(parts - whole) <= 1e-10 * whole, std::nullopt,
                    std::to_string(parts) + " vs " + std::to_string(whole)};
  if (whole == 0.0) {
    check.passed = parts == 0.0;
  }
  report.checks.push_back(std::move(check));
  return report;
}

Report isometry_check(int alpha, const Word& j, const SparseVector& x,
                      const RepConfig& cfg) {
  if (alpha < 0) {
    throw std::invalid_argument("isometry_check: negative alpha");
  }
  validate_word(j);
  const double base = lp_norm(x, cfg);

  SparseVector iso_sum;
  SparseVector contraction_sum;
  for (const Word& k : enumerate_words(alpha)) {
    iso_sum = iso_sum + apply_B_word(concat(k, j), apply_A_star_word(k, x));
    contraction_sum =
        contraction_sum + apply_B_word(k, apply_A_star_word(concat(k, j), x));
  }

  Report report;
  const std::string range = "alpha=" + std::to_string(alpha) + " j=" + word_digits(j);
  const double iso_norm = lp_norm(iso_sum, cfg);
  report.checks.push_back(CheckResult{
      "isometry", range, std::abs(iso_norm - base) <= 1e-10 * std::max(base, 1e-300),
      std::nullopt, std::to_string(iso_norm) + " vs " + std::to_string(base)});
  const double contraction_norm = lp_norm(contraction_sum, cfg);
  report.checks.push_back(CheckResult{
      "contraction", range, contraction_norm <= base * (1.0 + 1e-10), std::nullopt,
      std::to_string(contraction_norm) + " <= " + std::to_string(base)});
  return report;
}

std::vector<CollapseRow> norm_collapse_experiment(int n_max, const RepConfig& cfg) {
  if (n_max < 1) {
    throw std::invalid_argument("norm_collapse_experiment: N_max must be at least 1");
  }
  if (n_max > 20) {
    throw std::invalid_argument("norm_collapse_experiment: N_max too large");
  }
  AlgElement h;
  const Scalar half(mpq_class(1, 2), 0);
  h.add_term(CuElement::gen_star(1), half);
  h.add_term(CuElement::gen_star(2), half);

  std::vector<CollapseRow> rows;
  AlgElement power = delta(CuElement::identity());
  for (int N = 1; N <= n_max; ++N) {
    power = sharp(power, h);

    std::set<Word> branch_words;
    for (const Word& w : enumerate_words(N)) {
      branch_words.insert(w);
    }
    const Functional mu = Functional::mu(std::move(branch_words));

    CollapseRow row;
    row.N = N;
    row.quotient_lower = quotient_norm_lower(power, mu, N + 1);

    SparseVector x;
    for (std::uint64_t n = 1; n <= (std::uint64_t{1} << N); ++n) {
      x.add(n, 1.0);
    }
    const double base = lp_norm(x, cfg);
    row.rep_ratio = lp_norm(apply_element(power, x, cfg), cfg) / base;
    row.bound = std::pow(2.0, -static_cast<double>(N) / cfg.p);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace cu2
