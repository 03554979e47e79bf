#include "json_io.hpp"

#include <sstream>

namespace cu2 {

json word_to_json(const Word& w) {
  json arr = json::array();
  for (Letter l : w) {
    arr.push_back(static_cast<int>(l));
  }
  return arr;
}

Word word_from_json(const json& j) {
  if (!j.is_array()) {
    throw std::invalid_argument("word: expected an array of 1/2");
  }
  Word w;
  for (const json& item : j) {
    if (!item.is_number_integer()) {
      throw std::invalid_argument("word: letters must be integers");
    }
    w.push_back(static_cast<Letter>(item.get<int>()));
  }
  validate_word(w);
  return w;
}

json element_key_to_json(const CuElement& t) {
  if (t.is_diamond()) {
    return json{{"diamond", true}};
  }
  return json{{"i", word_to_json(t.left())}, {"j", word_to_json(t.right())}};
}

CuElement element_key_from_json(const json& j) {
  if (j.contains("diamond") && j["diamond"].get<bool>()) {
    return CuElement::diamond();
  }
  return CuElement::pair(word_from_json(j.at("i")), word_from_json(j.at("j")));
}

json alg_element_to_json(const AlgElement& f) {
  json terms = json::array();
  for (const auto& [t, c] : f.terms()) {
    terms.push_back(json{{"i", word_to_json(t.left())},
                         {"j", word_to_json(t.right())},
                         {"re", c.re_string()},
                         {"im", c.im_string()}});
  }
  return json{{"terms", std::move(terms)}};
}

AlgElement alg_element_from_json(const json& j) {
  AlgElement f;
  for (const json& term : j.at("terms")) {
    CuElement t = CuElement::pair(word_from_json(term.at("i")),
                                  word_from_json(term.at("j")));
    f.add_term(t, Scalar::from_strings(term.at("re").get<std::string>(),
                                       term.at("im").get<std::string>()));
  }
  return f;
}

json certificate_to_json(const IdealCertificate& cert) {
  json terms = json::array();
  for (const CertificateTerm& term : cert.terms) {
    terms.push_back(json{{"i", word_to_json(term.i)},
                         {"j", word_to_json(term.j)},
                         {"m", word_to_json(term.m)},
                         {"re", term.c.re_string()},
                         {"im", term.c.im_string()}});
  }
  json classes = json::array();
  for (const IdealCertificate::ClassTrace& trace : cert.classes) {
    classes.push_back(
        json{{"class", element_key_to_json(trace.v)}, {"depth", trace.depth}});
  }
  return json{{"terms", std::move(terms)}, {"classes", std::move(classes)}};
}

IdealCertificate certificate_from_json(const json& j) {
  IdealCertificate cert;
  for (const json& term : j.at("terms")) {
    cert.terms.push_back(CertificateTerm{
        word_from_json(term.at("i")), word_from_json(term.at("j")),
        word_from_json(term.at("m")),
        Scalar::from_strings(term.at("re").get<std::string>(),
                             term.at("im").get<std::string>())});
  }
  return cert;
}

json witness_to_json(const FactorizationWitness& w) {
  return json{{"g", alg_element_to_json(w.g)},
              {"h", alg_element_to_json(w.h)},
              {"cost", w.cost},
              {"trace", json{{"class", element_key_to_json(w.class_v)},
                             {"branch", word_to_json(w.branch)},
                             {"z_re", w.z.re_string()},
                             {"z_im", w.z.im_string()},
                             {"elimination", word_to_json(w.elimination)}}}};
}

json report_to_json(const Report& report) {
  json checks = json::array();
  for (const CheckResult& c : report.checks) {
    json entry{{"check", c.check}, {"range", c.range}, {"passed", c.passed}};
    if (c.counterexample) {
      entry["counterexample"] = *c.counterexample;
    }
    if (c.value) {
      entry["value"] = *c.value;
    }
    checks.push_back(std::move(entry));
  }
  return json{{"checks", std::move(checks)},
              {"all_passed", report.all_passed()}};
}

json sparse_vector_to_json(const SparseVector& x) {
  json entries = json::array();
  for (const auto& [n, v] : x.entries()) {
    entries.push_back(json{{"n", n}, {"re", v.real()}, {"im", v.imag()}});
  }
  return json{{"entries", std::move(entries)}};
}

SparseVector sparse_vector_from_json(const json& j) {
  SparseVector x;
  for (const json& entry : j.at("entries")) {
    x.add(entry.at("n").get<std::uint64_t>(),
          {entry.at("re").get<double>(),
           entry.contains("im") ? entry.at("im").get<double>() : 0.0});
  }
  return x;
}

json collapse_rows_to_json(const std::vector<CollapseRow>& rows) {
  json arr = json::array();
  for (const CollapseRow& row : rows) {
    arr.push_back(json{{"N", row.N},
                       {"quotient_lower", row.quotient_lower},
                       {"rep_ratio", row.rep_ratio},
                       {"bound", row.bound}});
  }
  return json{{"rows", std::move(arr)}};
}

std::string collapse_rows_to_csv(const std::vector<CollapseRow>& rows) {
  std::ostringstream out;
  out << "N,quotient_lower,rep_ratio,bound\n";
  out.precision(17);
  for (const CollapseRow& row : rows) {
    out << row.N << ',' << row.quotient_lower << ',' << row.rep_ratio << ','
        << row.bound << '\n';
  }
  return out.str();
}

}  // namespace cu2
