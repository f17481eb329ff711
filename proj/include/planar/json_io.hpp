#pragma once

#include <json.hpp>

#include "planar/quadratic.hpp"
#include "planar/tl.hpp"

namespace planar {

// Exact scalar <-> {"N": ..., "terms": [{"qexp": ..., "coeffs": ["p/q", ...]}]}
// with an extra "den_terms" array when the value is a genuine ratio.
inline nlohmann::json laurent_terms_json(const Laurent& p, unsigned n_field) {
  auto arr = nlohmann::json::array();
  for (int e = p.lo(); e <= p.hi(); ++e) {
    const Cyclo& c = p.at(e);
    if (c.is_zero()) continue;
    nlohmann::json term;
    term["qexp"] = e;
    auto coeffs = nlohmann::json::array();
    size_t dim = c.coeffs().size();
    for (size_t j = 0; j < dim; ++j) coeffs.push_back(c.coeffs()[j].get_str());
    term["coeffs"] = coeffs;
    arr.push_back(term);
  }
  (void)n_field;
  return arr;
}

inline nlohmann::json to_json(const ExactCtx& ctx, const Exact& value) {
  Exact v = value;
  v.reduce();
  nlohmann::json j;
  j["N"] = ctx.field ? ctx.field->N() : 1;
  j["terms"] = laurent_terms_json(v.num(), ctx.field ? ctx.field->N() : 1);
  if (!v.is_polynomial()) j["den_terms"] = laurent_terms_json(v.den(), ctx.field ? ctx.field->N() : 1);
  return j;
}

inline nlohmann::json to_json(const NumericCtx&, const std::complex<double>& value) {
  return nlohmann::json::array({value.real(), value.imag()});
}

inline Exact exact_from_json(const ExactCtx& ctx, const nlohmann::json& j) {
  unsigned n = j.at("N").get<unsigned>();
  const CycloField* f = n > 1 ? CycloField::get(n) : nullptr;
  if (ctx.field && f && ctx.field != f) throw std::invalid_argument("scalar field mismatch");
  auto read_poly = [&](const nlohmann::json& terms) {
    Laurent p;
    for (const auto& t : terms) {
      int e = t.at("qexp").get<int>();
      std::vector<mpq_class> coeffs;
      for (const auto& c : t.at("coeffs")) coeffs.emplace_back(c.get<std::string>());
      if (f) coeffs.resize(f->degree());
      p.add_in_place(Laurent(e, f ? Cyclo(f, coeffs) : Cyclo(coeffs.at(0))));
    }
    return p;
  };
  Laurent num = read_poly(j.at("terms"));
  if (j.contains("den_terms")) return Exact(num, read_poly(j.at("den_terms")));
  return Exact(num);
}

template <class Ctx, class S = typename Ctx::Scalar>
nlohmann::json to_json(const Ctx& ctx, const TLElement<S>& x) {
  nlohmann::json j;
  j["n"] = x.n;
  j["sign"] = x.shading == Shading::unshaded ? "+" : "-";
  j["terms"] = nlohmann::json::array();
  for (const auto& [d, c] : x.terms) {
    nlohmann::json term;
    auto pairing = nlohmann::json::array();
    for (int p = 0; p < d.points(); ++p) {
      if (p < d.pair[p]) pairing.push_back(nlohmann::json::array({p, d.pair[p]}));
    }
    term["pairing"] = pairing;
    term["coeff"] = to_json(ctx, c);
    j["terms"].push_back(term);
  }
  return j;
}

template <class Ctx, class S = typename Ctx::Scalar>
TLElement<S> tl_from_json(const Ctx& ctx, const nlohmann::json& j) {
  TLElement<S> x;
  x.n = j.at("n").get<uint8_t>();
  x.shading = j.at("sign").get<std::string>() == "+" ? Shading::unshaded : Shading::shaded;
  for (const auto& term : j.at("terms")) {
    TLDiagram d = TLDiagram::blank(x.n, x.shading);
    for (const auto& pr : term.at("pairing")) d.link(pr.at(0).get<int>(), pr.at(1).get<int>());
    S coeff;
    if constexpr (std::is_same_v<S, Exact>) {
      coeff = exact_from_json(ctx, term.at("coeff"));
    } else {
      coeff = {term.at("coeff").at(0).get<double>(), term.at("coeff").at(1).get<double>()};
    }
    add_term(ctx, x, d, coeff);
  }
  return x;
}

// Structure-constant files: {"n":..., "labels":[{"name","omega","sigma"}],
// "a": [[[re,im],...]...], "b": ...} with a[r][s][t] flattened as nested arrays.
inline StructureConstants<std::complex<double>> sc_from_json(const NumericCtx& ctx,
                                                             const nlohmann::json& j) {
  int n = j.at("n").get<int>();
  std::vector<LowestWeightLabel> labels;
  for (const auto& l : j.at("labels")) {
    RootOfUnity omega = RootOfUnity::parse(l.at("omega").get<std::string>());
    RootOfUnity sigma = l.contains("sigma") ? RootOfUnity::parse(l.at("sigma").get<std::string>())
                                            : omega.principal_sqrt();
    labels.emplace_back(n, omega, sigma, l.value("name", "R"));
  }
  auto sc = StructureConstants<std::complex<double>>::zeros(labels, ctx.zero());
  auto read = [&](const nlohmann::json& tab, std::vector<std::complex<double>>& out) {
    int m = sc.size();
    for (int r = 0; r < m; ++r)
      for (int s = 0; s < m; ++s)
        for (int t = 0; t < m; ++t) {
          const auto& v = tab.at(static_cast<size_t>(r)).at(static_cast<size_t>(s)).at(static_cast<size_t>(t));
          out[sc.idx(r, s, t)] = {v.at(0).get<double>(), v.at(1).get<double>()};
        }
  };
  read(j.at("a"), sc.a);
  read(j.at("b"), sc.b);
  validate_structure_constants(ctx, sc);
  return sc;
}

inline nlohmann::json sc_to_json(const NumericCtx& ctx,
                                 const StructureConstants<std::complex<double>>& sc) {
  nlohmann::json j;
  j["n"] = sc.n();
  j["labels"] = nlohmann::json::array();
  for (const auto& l : sc.labels) {
    j["labels"].push_back(
        {{"name", l.name}, {"omega", l.omega.str()}, {"sigma", l.sigma.str()}});
  }
  auto dump = [&](const std::vector<std::complex<double>>& tab) {
    int m = sc.size();
    auto out = nlohmann::json::array();
    for (int r = 0; r < m; ++r) {
      auto rr = nlohmann::json::array();
      for (int s = 0; s < m; ++s) {
        auto ss = nlohmann::json::array();
        for (int t = 0; t < m; ++t) {
          const auto& v = tab[sc.idx(r, s, t)];
          ss.push_back(nlohmann::json::array({v.real(), v.imag()}));
        }
        rr.push_back(ss);
      }
      out.push_back(rr);
    }
    return out;
  };
  j["a"] = dump(sc.a);
  j["b"] = dump(sc.b);
  (void)ctx;
  return j;
}

}  // namespace planar
