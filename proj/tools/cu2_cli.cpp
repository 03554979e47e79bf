// Command-line front end for the Cu2 semigroup-algebra library. All
// computation goes through the shared C API; this translation unit only
// parses arguments, renders output, and maps status codes to exit codes
// (0 success, 1 domain error, 2 parse error).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "cu2/cu2.h"

namespace {

using nlohmann::json;

struct Options {
  std::string format = "text";
  std::string output;
};

int exit_code_for(cu2_status status) {
  return status == CU2_ERR_PARSE ? 2 : 1;
}

void emit(const Options& opt, const std::string& payload) {
  if (opt.output.empty()) {
    std::cout << payload << std::endl;
    return;
  }
  std::ofstream out(opt.output);
  if (!out) {
    std::cerr << "cannot open output file: " << opt.output << std::endl;
    std::exit(1);
  }
  out << payload << std::endl;
}

int fail(const Options& opt, cu2_status status) {
  json err{{"error",
            {{"code", cu2_status_name(status)}, {"message", cu2_last_error()}}}};
  if (opt.format == "json") {
    emit(opt, err.dump());
  } else {
    emit(opt, std::string("error ") + cu2_status_name(status) + ": " +
                   cu2_last_error());
  }
  return exit_code_for(status);
}

std::string take_string(char* s) {
  std::string out = s == nullptr ? "" : s;
  cu2_string_free(s);
  return out;
}

using ElementPtr = std::unique_ptr<cu2_element, decltype(&cu2_element_free)>;
using FunctionalPtr = std::unique_ptr<cu2_functional, decltype(&cu2_functional_free)>;

ElementPtr wrap(cu2_element* f) { return ElementPtr(f, &cu2_element_free); }
FunctionalPtr wrap(cu2_functional* phi) {
  return FunctionalPtr(phi, &cu2_functional_free);
}

std::string element_text(const cu2_element* f) {
  char* s = nullptr;
  cu2_element_to_text(f, &s);
  return take_string(s);
}

json element_json(const cu2_element* f) {
  char* s = nullptr;
  cu2_element_to_json(f, &s);
  return json::parse(take_string(s));
}

/// "1:1,2:0.5" or "1:(0.5;-1)" entries; "ones:N" for e_1 + ... + e_N.
std::string vector_spec_to_json(const std::string& spec) {
  json entries = json::array();
  if (spec.rfind("ones:", 0) == 0) {
    const long n = std::stol(spec.substr(5));
    for (long i = 1; i <= n; ++i) {
      entries.push_back(json{{"n", i}, {"re", 1.0}, {"im", 0.0}});
    }
  } else {
    std::istringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
      const std::size_t colon = item.find(':');
      if (colon == std::string::npos) {
        throw std::invalid_argument("vector entries look like index:value");
      }
      const std::string value = item.substr(colon + 1);
      double re = 0.0;
      double im = 0.0;
      if (!value.empty() && value.front() == '(') {
        if (std::sscanf(value.c_str(), "(%lf;%lf)", &re, &im) != 2) {
          throw std::invalid_argument("complex entries look like (re;im)");
        }
      } else {
        re = std::stod(value);
      }
      entries.push_back(
          json{{"n", std::stoull(item.substr(0, colon))}, {"re", re}, {"im", im}});
    }
  }
  return json{{"entries", std::move(entries)}}.dump();
}

std::string render_report_text(const json& report) {
  std::ostringstream out;
  for (const json& check : report.at("checks")) {
    out << check.at("check").get<std::string>() << " ["
        << check.at("range").get<std::string>() << "]: "
        << (check.at("passed").get<bool>() ? "pass" : "FAIL");
    if (check.contains("value")) {
      out << "  value=" << check.at("value").get<std::string>();
    }
    if (check.contains("counterexample")) {
      out << "  counterexample=" << check.at("counterexample").get<std::string>();
    }
    out << '\n';
  }
  out << (report.at("all_passed").get<bool>() ? "all checks passed"
                                              : "SOME CHECKS FAILED");
  return out.str();
}

std::string word_text(const json& w) {
  std::string s;
  for (const json& l : w) {
    s += std::to_string(l.get<int>());
  }
  return s.empty() ? "(empty)" : s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computation in the l1 algebra of the polycyclic monoid Cu2"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--output", opt.output, "write the result to a file");

  int max_length = 6;
  double p = 1.0;
  int n_max = 12;
  int basis_range = 1000;
  unsigned seed = 0;

  std::vector<std::string> exprs;
  std::string expr;
  std::string functional_spec;
  std::string vector_spec;

  auto* cmd_mul = app.add_subcommand("mul", "sharp product of expressions");
  cmd_mul->add_option("expr", exprs, "expressions to multiply")->required();

  auto* cmd_star = app.add_subcommand("star", "involution of an expression");
  cmd_star->add_option("expr", expr)->required();

  auto* cmd_norm = app.add_subcommand("norm", "l1 norm");
  cmd_norm->add_option("expr", expr)->required();

  auto* cmd_membership = app.add_subcommand("membership", "ideal membership");
  cmd_membership->add_option("expr", expr)->required();

  auto* cmd_certificate =
      app.add_subcommand("certificate", "generator decomposition of an ideal element");
  cmd_certificate->add_option("expr", expr)->required();

  auto* cmd_factorize =
      app.add_subcommand("factorize", "identity factorization witness");
  cmd_factorize->add_option("expr", expr)->required();

  auto* cmd_cpi = app.add_subcommand("cpi-bound", "witness cost bound");
  cmd_cpi->add_option("expr", expr)->required();

  auto* cmd_pair = app.add_subcommand("pair", "dual pairing with a functional");
  cmd_pair->add_option("expr", expr)->required();
  cmd_pair->add_option("functional", functional_spec, "tau | mu:<words> | fs:<expr>")
      ->required();

  int qnorm_length = 0;
  auto* cmd_qnorm = app.add_subcommand("qnorm-lower", "certified quotient-norm lower bound");
  cmd_qnorm->add_option("expr", expr)->required();
  cmd_qnorm->add_option("functional", functional_spec)->required();
  cmd_qnorm->add_option("--max-length", qnorm_length,
                        "fixed-point check length (0 = smallest admissible)");

  auto* cmd_trace = app.add_subcommand("trace-check", "trace diagnostics for a functional");
  cmd_trace->add_option("functional", functional_spec)->required();
  cmd_trace->add_option("--max-length", max_length)->capture_default_str();

  auto* cmd_tstar = app.add_subcommand("tstar-check", "adjoint fixed-point check");
  cmd_tstar->add_option("functional", functional_spec)->required();
  cmd_tstar->add_option("--max-length", max_length)->capture_default_str();

  auto* cmd_rep_apply = app.add_subcommand("rep-apply", "spatial action on a vector");
  cmd_rep_apply->add_option("expr", expr)->required();
  cmd_rep_apply
      ->add_option("vector", vector_spec, "index:value[,index:value...] or ones:N")
      ->required();
  cmd_rep_apply->add_option("--p", p)->capture_default_str();

  auto* cmd_rep_check = app.add_subcommand("rep-check", "operator relation checks");
  cmd_rep_check->add_option("--n-max", basis_range, "basis range")->capture_default_str();
  cmd_rep_check->add_option("--p", p)->capture_default_str();
  cmd_rep_check->add_option("--seed", seed)->capture_default_str();

  auto* cmd_collapse = app.add_subcommand("collapse", "norm-collapse experiment table");
  cmd_collapse->add_option("--n-max", n_max)->capture_default_str();
  cmd_collapse->add_option("--p", p)->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  const bool as_json = opt.format == "json";

  auto parse_element_arg = [&](const std::string& text, ElementPtr& out) -> int {
    cu2_element* raw = nullptr;
    if (cu2_status st = cu2_element_parse(text.c_str(), &raw); st != CU2_OK) {
      return fail(opt, st);
    }
    out = wrap(raw);
    return 0;
  };
  auto parse_functional_arg = [&](FunctionalPtr& out) -> int {
    cu2_functional* raw = nullptr;
    if (cu2_status st = cu2_functional_parse(functional_spec.c_str(), &raw);
        st != CU2_OK) {
      return fail(opt, st);
    }
    out = wrap(raw);
    return 0;
  };

  if (cmd_mul->parsed()) {
    ElementPtr acc(nullptr, &cu2_element_free);
    if (int rc = parse_element_arg(exprs.front(), acc)) {
      return rc;
    }
    for (std::size_t i = 1; i < exprs.size(); ++i) {
      ElementPtr rhs(nullptr, &cu2_element_free);
      if (int rc = parse_element_arg(exprs[i], rhs)) {
        return rc;
      }
      cu2_element* product = nullptr;
      if (cu2_status st = cu2_sharp(acc.get(), rhs.get(), &product); st != CU2_OK) {
        return fail(opt, st);
      }
      acc = wrap(product);
    }
    if (as_json) {
      emit(opt, json{{"element", element_json(acc.get())},
                     {"text", element_text(acc.get())}}
                    .dump());
    } else {
      emit(opt, element_text(acc.get()));
    }
    return 0;
  }

  if (cmd_star->parsed()) {
    ElementPtr f(nullptr, &cu2_element_free);
    if (int rc = parse_element_arg(expr, f)) {
      return rc;
    }
    cu2_element* starred = nullptr;
    if (cu2_status st = cu2_involution(f.get(), &starred); st != CU2_OK) {
      return fail(opt, st);
    }
    ElementPtr g = wrap(starred);
    if (as_json) {
      emit(opt,
           json{{"element", element_json(g.get())}, {"text", element_text(g.get())}}
               .dump());
    } else {
      emit(opt, element_text(g.get()));
    }
    return 0;
  }

  if (cmd_norm->parsed()) {
    ElementPtr f(nullptr, &cu2_element_free);
    if (int rc = parse_element_arg(expr, f)) {
      return rc;
    }
    double norm = 0.0;
    cu2_l1_norm(f.get(), &norm);
    char* exact = nullptr;
    json payload{{"l1", norm}};
    if (cu2_l1_norm_exact(f.get(), &exact) == CU2_OK) {
      payload["l1_exact"] = take_string(exact);
    }
    if (as_json) {
      emit(opt, payload.dump());
    } else {
      std::ostringstream out;
      out << "l1 norm: " << norm;
      if (payload.contains("l1_exact")) {
        out << " (exact " << payload["l1_exact"].get<std::string>() << ")";
      }
      emit(opt, out.str());
    }
    return 0;
  }

  if (cmd_membership->parsed()) {
    ElementPtr f(nullptr, &cu2_element_free);
    if (int rc = parse_element_arg(expr, f)) {
      return rc;
    }
    const int result = cu2_in_ideal(f.get());
    if (result < 0) {
      return fail(opt, CU2_ERR_INTERNAL);
    }
    if (as_json) {
      emit(opt, json{{"in_ideal", result == 1}}.dump());
    } else {
      emit(opt, std::string("in_ideal: ") + (result == 1 ? "true" : "false"));
    }
    return 0;
  }

  if (cmd_certificate->parsed()) {
    ElementPtr f(nullptr, &cu2_element_free);
    if (int rc = parse_element_arg(expr, f)) {
      return rc;
    }
    char* cert = nullptr;
    if (cu2_status st = cu2_ideal_certificate(f.get(), &cert); st != CU2_OK) {
      return fail(opt, st);
    }
    const json payload = json::parse(take_string(cert));
    if (as_json) {
      emit(opt, json{{"certificate", payload}}.dump());
    } else {
      std::ostringstream out;
      out << "certificate terms (i | j | m | coefficient):\n";
      for (const json& term : payload.at("terms")) {
        out << "  " << word_text(term.at("i")) << " | " << word_text(term.at("j"))
            << " | " << word_text(term.at("m")) << " | " << term.at("re").get<std::string>()
            << (term.at("im").get<std::string>() == "0/1"
                    ? ""
                    : " + " + term.at("im").get<std::string>() + " i")
            << '\n';
      }
      out << "verified: " << (payload.at("verified").get<bool>() ? "true" : "false");
      emit(opt, out.str());
    }
    return 0;
  }

  if (cmd_factorize->parsed() || cmd_cpi->parsed()) {
    ElementPtr f(nullptr, &cu2_element_free);
    if (int rc = parse_element_arg(expr, f)) {
      return rc;
    }
    char* witness = nullptr;
    if (cu2_status st = cu2_factorize_identity(f.get(), &witness); st != CU2_OK) {
      return fail(opt, st);
    }
    const json payload = json::parse(take_string(witness));
    if (cmd_cpi->parsed()) {
      double norm = 0.0;
      cu2_l1_norm(f.get(), &norm);
      const double cost = payload.at("cost").get<double>();
      if (as_json) {
        emit(opt, json{{"cpi_upper_bound", cost},
                       {"l1_norm", norm},
                       {"lower_bound", 1.0 / norm}}
                      .dump());
      } else {
        std::ostringstream out;
        out << "cpi upper bound: " << cost << " (trivial lower bound " << 1.0 / norm
            << ")";
        emit(opt, out.str());
      }
      return 0;
    }
    if (as_json) {
      emit(opt, json{{"witness", payload}}.dump());
    } else {
      std::ostringstream out;
      ElementPtr g(nullptr, &cu2_element_free);
      ElementPtr h(nullptr, &cu2_element_free);
      cu2_element* raw = nullptr;
      cu2_element_from_json(payload.at("g").dump().c_str(), &raw);
      g = wrap(raw);
      raw = nullptr;
      cu2_element_from_json(payload.at("h").dump().c_str(), &raw);
      h = wrap(raw);
      out << "g = " << element_text(g.get()) << '\n'
          << "h = " << element_text(h.get()) << '\n'
          << "cost = " << payload.at("cost").get<double>() << '\n'
          << "verified: " << (payload.at("verified").get<bool>() ? "true" : "false");
      emit(opt, out.str());
    }
    return 0;
  }

  if (cmd_pair->parsed()) {
    ElementPtr f(nullptr, &cu2_element_free);
    if (int rc = parse_element_arg(expr, f)) {
      return rc;
    }
    FunctionalPtr phi(nullptr, &cu2_functional_free);
    if (int rc = parse_functional_arg(phi)) {
      return rc;
    }
    char* value = nullptr;
    if (cu2_status st = cu2_pair(f.get(), phi.get(), &value); st != CU2_OK) {
      return fail(opt, st);
    }
    const json payload = json::parse(take_string(value));
    if (as_json) {
      emit(opt, payload.dump());
    } else {
      std::ostringstream out;
      out << "pairing: " << payload.at("re").get<std::string>();
      if (payload.at("im").get<std::string>() != "0/1") {
        out << " + " << payload.at("im").get<std::string>() << " i";
      }
      out << " (abs " << payload.at("abs").get<double>() << ")";
      emit(opt, out.str());
    }
    return 0;
  }

  if (cmd_qnorm->parsed()) {
    ElementPtr f(nullptr, &cu2_element_free);
    if (int rc = parse_element_arg(expr, f)) {
      return rc;
    }
    FunctionalPtr phi(nullptr, &cu2_functional_free);
    if (int rc = parse_functional_arg(phi)) {
      return rc;
    }
    double bound = 0.0;
    int checked = 0;
    if (cu2_status st =
            cu2_quotient_norm_lower(f.get(), phi.get(), qnorm_length, &bound, &checked);
        st != CU2_OK) {
      return fail(opt, st);
    }
    if (as_json) {
      emit(opt,
           json{{"quotient_norm_lower", bound}, {"checked_length", checked}}.dump());
    } else {
      std::ostringstream out;
      out << "quotient norm lower bound: " << bound << " (fixed-point check at length "
          << checked << ")";
      emit(opt, out.str());
    }
    return 0;
  }

  if (cmd_trace->parsed() || cmd_tstar->parsed()) {
    FunctionalPtr phi(nullptr, &cu2_functional_free);
    if (int rc = parse_functional_arg(phi)) {
      return rc;
    }
    char* result = nullptr;
    cu2_status st = cmd_trace->parsed()
                        ? cu2_trace_checks(phi.get(), max_length, &result)
                        : cu2_tstar_check(phi.get(), max_length, &result);
    if (st != CU2_OK) {
      return fail(opt, st);
    }
    const json payload = json::parse(take_string(result));
    if (as_json) {
      emit(opt, payload.dump());
    } else if (cmd_trace->parsed()) {
      emit(opt, render_report_text(payload));
    } else {
      std::ostringstream out;
      out << "T*-fixed at length " << payload.at("max_length").get<int>() << ": "
          << (payload.at("fixed").get<bool>() ? "true" : "false");
      if (payload.contains("counterexample")) {
        out << " (fails at " << payload.at("counterexample").dump() << ")";
      }
      emit(opt, out.str());
    }
    return 0;
  }

  if (cmd_rep_apply->parsed()) {
    ElementPtr f(nullptr, &cu2_element_free);
    if (int rc = parse_element_arg(expr, f)) {
      return rc;
    }
    std::string vector_json;
    try {
      vector_json = vector_spec_to_json(vector_spec);
    } catch (const std::exception& e) {
      json err{{"error", {{"code", "ParseError"}, {"message", e.what()}}}};
      emit(opt, as_json ? err.dump() : std::string("error ParseError: ") + e.what());
      return 2;
    }
    char* result = nullptr;
    if (cu2_status st = cu2_rep_apply(f.get(), vector_json.c_str(), p, &result);
        st != CU2_OK) {
      return fail(opt, st);
    }
    const json payload = json::parse(take_string(result));
    if (as_json) {
      emit(opt, payload.dump());
    } else {
      std::ostringstream out;
      for (const json& entry : payload.at("entries")) {
        out << "e_" << entry.at("n").get<std::uint64_t>() << ": "
            << entry.at("re").get<double>();
        if (entry.at("im").get<double>() != 0.0) {
          out << " + " << entry.at("im").get<double>() << " i";
        }
        out << '\n';
      }
      out << "norm (p=" << p << "): " << payload.at("norm").get<double>();
      emit(opt, out.str());
    }
    return 0;
  }

  if (cmd_rep_check->parsed()) {
    char* result = nullptr;
    if (cu2_status st = cu2_rep_check(basis_range, p, seed, &result); st != CU2_OK) {
      return fail(opt, st);
    }
    const json payload = json::parse(take_string(result));
    emit(opt, as_json ? payload.dump() : render_report_text(payload));
    return payload.at("all_passed").get<bool>() ? 0 : 1;
  }

  if (cmd_collapse->parsed()) {
    char* result = nullptr;
    if (cu2_status st = cu2_collapse(n_max, p, as_json ? 0 : 1, &result);
        st != CU2_OK) {
      return fail(opt, st);
    }
    std::string payload = take_string(result);
    if (!as_json && !payload.empty() && payload.back() == '\n') {
      payload.pop_back();
    }
    emit(opt, payload);
    return 0;
  }

  return 0;
}
