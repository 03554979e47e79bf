#include "cu2/cu2.h"

#include <cstring>
#include <random>

#include "expr.hpp"
#include "json_io.hpp"

struct cu2_element {
  cu2::AlgElement value;
};

struct cu2_functional {
  cu2::Functional value;

  explicit cu2_functional(cu2::Functional f) : value(std::move(f)) {}
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) {
    std::memcpy(out, s.c_str(), s.size() + 1);
  }
  return out;
}

/// Runs the body and converts exceptions into status codes.
template <typename Fn>
cu2_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const cu2::ParseError& e) {
    g_last_error = e.what();
    return CU2_ERR_PARSE;
  } catch (const cu2::NotInIdealError& e) {
    g_last_error = e.what();
    return CU2_ERR_NOT_IN_IDEAL;
  } catch (const cu2::InIdealError& e) {
    g_last_error = e.what();
    return CU2_ERR_IN_IDEAL;
  } catch (const cu2::ZeroElementError& e) {
    g_last_error = e.what();
    return CU2_ERR_ZERO_ELEMENT;
  } catch (const cu2::InternalError& e) {
    g_last_error = e.what();
    return CU2_ERR_INTERNAL;
  } catch (const nlohmann::json::exception& e) {
    g_last_error = e.what();
    return CU2_ERR_PARSE;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return CU2_ERR_DOMAIN;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return CU2_ERR_DOMAIN;
  } catch (const std::overflow_error& e) {
    g_last_error = e.what();
    return CU2_ERR_DOMAIN;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CU2_ERR_INTERNAL;
  }
}

cu2_status require(bool ok, const char* message) {
  if (!ok) {
    g_last_error = message;
    return CU2_ERR_INVALID_ARGUMENT;
  }
  return CU2_OK;
}

cu2::Functional parse_functional_spec(const std::string& spec) {
  if (spec == "tau") {
    return cu2::Functional::tau();
  }
  if (spec.rfind("mu:", 0) == 0) {
    std::set<cu2::Word> words;
    std::string rest = spec.substr(3);
    std::size_t start = 0;
    while (start <= rest.size()) {
      std::size_t comma = rest.find(',', start);
      std::string digits = rest.substr(
          start, comma == std::string::npos ? std::string::npos : comma - start);
      if (digits.empty()) {
        throw cu2::ParseError("empty word in functional spec '" + spec + "'",
                              3 + start, {"word over 1/2"});
      }
      words.insert(cu2::parse_word(digits));
      if (comma == std::string::npos) {
        break;
      }
      start = comma + 1;
    }
    if (words.empty()) {
      throw cu2::ParseError("mu functional needs at least one word", 3,
                            {"word over 1/2"});
    }
    return cu2::Functional::mu(std::move(words));
  }
  if (spec.rfind("fs:", 0) == 0) {
    return cu2::Functional::finite_support(cu2::parse_element(spec.substr(3)));
  }
  throw cu2::ParseError("unknown functional spec '" + spec + "'", 0,
                        {"tau", "mu:<words>", "fs:<expr>"});
}

}  // namespace

extern "C" {

const char* cu2_status_name(cu2_status status) {
  switch (status) {
    case CU2_OK:
      return "Ok";
    case CU2_ERR_PARSE:
      return "ParseError";
    case CU2_ERR_DOMAIN:
      return "DomainError";
    case CU2_ERR_NOT_IN_IDEAL:
      return "NotInIdeal";
    case CU2_ERR_IN_IDEAL:
      return "InIdeal";
    case CU2_ERR_ZERO_ELEMENT:
      return "ZeroElement";
    case CU2_ERR_INVALID_ARGUMENT:
      return "InvalidArgument";
    case CU2_ERR_INTERNAL:
      return "InternalError";
  }
  return "Unknown";
}

const char* cu2_last_error(void) { return g_last_error.c_str(); }

void cu2_string_free(char* s) { std::free(s); }

cu2_status cu2_element_parse(const char* text, cu2_element** out) {
  if (cu2_status st = require(text != nullptr && out != nullptr, "null argument")) {
    return st;
  }
  return guarded([&] {
    *out = new cu2_element{cu2::parse_element(text)};
    return CU2_OK;
  });
}

cu2_status cu2_element_from_json(const char* json_text, cu2_element** out) {
  if (cu2_status st = require(json_text != nullptr && out != nullptr, "null argument")) {
    return st;
  }
  return guarded([&] {
    *out = new cu2_element{cu2::alg_element_from_json(cu2::json::parse(json_text))};
    return CU2_OK;
  });
}

void cu2_element_free(cu2_element* f) { delete f; }

cu2_status cu2_element_to_json(const cu2_element* f, char** out) {
  if (cu2_status st = require(f != nullptr && out != nullptr, "null argument")) {
    return st;
  }
  return guarded([&] {
    *out = dup_string(cu2::alg_element_to_json(f->value).dump());
    return CU2_OK;
  });
}

cu2_status cu2_element_to_text(const cu2_element* f, char** out) {
  if (cu2_status st = require(f != nullptr && out != nullptr, "null argument")) {
    return st;
  }
  return guarded([&] {
    *out = dup_string(cu2::format_element(f->value));
    return CU2_OK;
  });
}

cu2_status cu2_sharp(const cu2_element* f, const cu2_element* g, cu2_element** out) {
  if (cu2_status st =
          require(f != nullptr && g != nullptr && out != nullptr, "null argument")) {
    return st;
  }
  return guarded([&] {
    *out = new cu2_element{cu2::sharp(f->value, g->value)};
    return CU2_OK;
  });
}

cu2_status cu2_add(const cu2_element* f, const cu2_element* g, cu2_element** out) {
  if (cu2_status st =
          require(f != nullptr && g != nullptr && out != nullptr, "null argument")) {
    return st;
  }
  return guarded([&] {
    *out = new cu2_element{f->value + g->value};
    return CU2_OK;
  });
}

cu2_status cu2_involution(const cu2_element* f, cu2_element** out) {
  if (cu2_status st = require(f != nullptr && out != nullptr, "null argument")) {
    return st;
  }
  return guarded([&] {
    *out = new cu2_element{cu2::involution(f->value)};
    return CU2_OK;
  });
}

cu2_status cu2_l1_norm(const cu2_element* f, double* out) {
  if (cu2_status st = require(f != nullptr && out != nullptr, "null argument")) {
    return st;
  }
  return guarded([&] {
    *out = cu2::l1_norm(f->value);
    return CU2_OK;
  });
}

cu2_status cu2_l1_norm_exact(const cu2_element* f, char** out) {
  if (cu2_status st = require(f != nullptr && out != nullptr, "null argument")) {
    return st;
  }
  return guarded([&] {
    auto exact = cu2::l1_norm_exact(f->value);
    if (!exact) {
      g_last_error = "element has non-real coefficients";
      return CU2_ERR_DOMAIN;
    }
    *out = dup_string(cu2::Scalar::rational_to_string(*exact));
    return CU2_OK;
  });
}

int cu2_in_ideal(const cu2_element* f) {
  if (f == nullptr) {
    g_last_error = "null argument";
    return -1;
  }
  int result = -1;
  guarded([&] {
    result = cu2::in_ideal(f->value) ? 1 : 0;
    return CU2_OK;
  });
  return result;
}

cu2_status cu2_ideal_certificate(const cu2_element* f, char** json_out) {
  if (cu2_status st = require(f != nullptr && json_out != nullptr, "null argument")) {
    return st;
  }
  return guarded([&] {
    cu2::IdealCertificate cert = cu2::ideal_certificate(f->value);
    cu2::json payload = cu2::certificate_to_json(cert);
    payload["verified"] = cert.expand() == f->value;
    *json_out = dup_string(payload.dump());
    return CU2_OK;
  });
}

cu2_status cu2_factorize_identity(const cu2_element* f, char** json_out) {
  if (cu2_status st = require(f != nullptr && json_out != nullptr, "null argument")) {
    return st;
  }
  return guarded([&] {
    cu2::FactorizationWitness w = cu2::factorize_identity(f->value);
    cu2::json payload = cu2::witness_to_json(w);
    payload["verified"] = cu2::sharp(w.g, cu2::sharp(f->value, w.h)) ==
                          cu2::delta(cu2::CuElement::identity());
    *json_out = dup_string(payload.dump());
    return CU2_OK;
  });
}

cu2_status cu2_cpi_upper_bound(const cu2_element* f, double* out) {
  if (cu2_status st = require(f != nullptr && out != nullptr, "null argument")) {
    return st;
  }
  return guarded([&] {
    *out = cu2::cpi_upper_bound(f->value);
    return CU2_OK;
  });
}

cu2_status cu2_functional_parse(const char* spec, cu2_functional** out) {
  if (cu2_status st = require(spec != nullptr && out != nullptr, "null argument")) {
    return st;
  }
  return guarded([&] {
    *out = new cu2_functional{parse_functional_spec(spec)};
    return CU2_OK;
  });
}

void cu2_functional_free(cu2_functional* phi) { delete phi; }

cu2_status cu2_pair(const cu2_element* f, const cu2_functional* phi, char** json_out) {
  if (cu2_status st = require(f != nullptr && phi != nullptr && json_out != nullptr,
                              "null argument")) {
    return st;
  }
  return guarded([&] {
    cu2::Scalar value = cu2::pair(f->value, phi->value);
    cu2::json payload{{"re", value.re_string()},
                      {"im", value.im_string()},
                      {"abs", value.abs()}};
    *json_out = dup_string(payload.dump());
    return CU2_OK;
  });
}

cu2_status cu2_quotient_norm_lower(const cu2_element* f, const cu2_functional* phi,
                                   int max_length, double* out, int* checked_length) {
  if (cu2_status st =
          require(f != nullptr && phi != nullptr && out != nullptr, "null argument")) {
    return st;
  }
  return guarded([&] {
    const int length =
        max_length > 0 ? max_length : f->value.max_support_length() + 1;
    *out = cu2::quotient_norm_lower(f->value, phi->value, length);
    if (checked_length != nullptr) {
      *checked_length = length;
    }
    return CU2_OK;
  });
}

cu2_status cu2_tstar_check(const cu2_functional* phi, int max_length, char** json_out) {
  if (cu2_status st = require(phi != nullptr && json_out != nullptr, "null argument")) {
    return st;
  }
  return guarded([&] {
    cu2::CuElement bad;
    const bool fixed = cu2::is_Tstar_fixed(phi->value, max_length, &bad);
    cu2::json payload{{"fixed", fixed}, {"max_length", max_length}};
    if (!fixed) {
      payload["counterexample"] = cu2::element_key_to_json(bad);
    }
    *json_out = dup_string(payload.dump());
    return CU2_OK;
  });
}

cu2_status cu2_trace_checks(const cu2_functional* phi, int max_length, char** json_out) {
  if (cu2_status st = require(phi != nullptr && json_out != nullptr, "null argument")) {
    return st;
  }
  return guarded([&] {
    *json_out =
        dup_string(cu2::report_to_json(cu2::trace_checks(phi->value, max_length)).dump());
    return CU2_OK;
  });
}

cu2_status cu2_rep_apply(const cu2_element* f, const char* vector_json, double p,
                         char** json_out) {
  if (cu2_status st = require(f != nullptr && vector_json != nullptr &&
                                  json_out != nullptr,
                              "null argument")) {
    return st;
  }
  return guarded([&] {
    cu2::RepConfig cfg{p};
    cu2::SparseVector x =
        cu2::sparse_vector_from_json(cu2::json::parse(vector_json));
    cu2::SparseVector y = cu2::apply_element(f->value, x, cfg);
    cu2::json payload = cu2::sparse_vector_to_json(y);
    payload["norm"] = cu2::lp_norm(y, cfg);
    payload["p"] = p;
    *json_out = dup_string(payload.dump());
    return CU2_OK;
  });
}

cu2_status cu2_rep_check(int n, double p, unsigned seed, char** json_out) {
  if (cu2_status st = require(json_out != nullptr, "null argument")) {
    return st;
  }
  if (cu2_status st = require(n >= 1 && n <= 10000000, "basis range out of bounds")) {
    return st;
  }
  return guarded([&] {
    cu2::RepConfig cfg{p};
    cu2::Report report = cu2::check_relations(static_cast<std::uint64_t>(n), cfg);

    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::uint64_t> index_dist(1, 1000000);
    std::uniform_real_distribution<double> value_dist(-1.0, 1.0);
    auto random_vector = [&] {
      cu2::SparseVector x;
      for (int entry = 0; entry < 20; ++entry) {
        x.add(index_dist(rng), {value_dist(rng), value_dist(rng)});
      }
      return x;
    };
    for (int alpha = 0; alpha <= 4; ++alpha) {
      cu2::Report sub = cu2::partition_norm_check(random_vector(), alpha, cfg);
      report.checks.insert(report.checks.end(), sub.checks.begin(), sub.checks.end());
    }
    for (const cu2::Word& j :
         {cu2::Word{}, cu2::Word{1}, cu2::Word{2}, cu2::Word{1, 2}}) {
      cu2::Report sub = cu2::isometry_check(3, j, random_vector(), cfg);
      report.checks.insert(report.checks.end(), sub.checks.begin(), sub.checks.end());
    }
    *json_out = dup_string(cu2::report_to_json(report).dump());
    return CU2_OK;
  });
}

cu2_status cu2_collapse(int n_max, double p, int csv, char** out) {
  if (cu2_status st = require(out != nullptr, "null argument")) {
    return st;
  }
  return guarded([&] {
    cu2::RepConfig cfg{p};
    const std::vector<cu2::CollapseRow> rows = cu2::norm_collapse_experiment(n_max, cfg);
    if (csv != 0) {
      *out = dup_string(cu2::collapse_rows_to_csv(rows));
    } else {
      cu2::json payload = cu2::collapse_rows_to_json(rows);
      payload["p"] = p;
      *out = dup_string(payload.dump());
    }
    return CU2_OK;
  });
}

}  // extern "C"
