#include "diffelim/report.hpp"

#include "diffelim/parser.hpp"

namespace diffelim {

Json order_json(int k) { return k <= kNegInf ? Json(nullptr) : Json(k); }

Json poly_json(const MultiPoly& p) { return p.str(); }

Json factored_json(const FactoredPoly& p) {
  Json j;
  j["unit"] = rational_str(p.unit);
  j["zero"] = p.is_zero();
  Json fs = Json::array();
  for (const auto& [f, e] : p.factors) fs.push_back({{"poly", f.str()}, {"exponent", e}, {"terms", f.size()}});
  j["factors"] = fs;
  return j;
}

std::string factored_str(const FactoredPoly& p) {
  if (p.is_zero()) return "0";
  if (p.factors.empty()) return rational_str(p.unit);
  std::string s;
  if (p.unit == -1) s = "-";
  else if (p.unit != 1) s = rational_str(p.unit) + "*";
  for (std::size_t i = 0; i < p.factors.size(); ++i) {
    if (i) s += "*";
    s += "(" + p.factors[i].first.str() + ")";
    if (p.factors[i].second != 1) s += "^" + std::to_string(p.factors[i].second);
  }
  return s;
}

namespace {

Json sparsity_json(const SparsityReport& r) {
  Json w = Json::array();
  for (const auto& [lo, hi] : r.window) w.push_back({lo, hi});
  return {{"window", w}, {"gaps", r.gaps}, {"sparseInOrder", r.sparse_in_order}};
}

std::string ps_name(const DiffSystem& sys, int i, int k) {
  return sys.names.at(static_cast<std::size_t>(i - 1)) + derivative_suffix(k);
}

}  // namespace

Json analysis_json(const DiffSystem& sys) {
  Json j;
  OrderMatrix om = order_matrix(sys);
  Json o = Json::array();
  for (const auto& row : om.o) {
    Json r = Json::array();
    for (int v : row) r.push_back(order_json(v));
    o.push_back(r);
  }
  j["orderMatrix"] = o;
  Json jac = Json::array();
  for (int i = 1; i <= sys.n(); ++i) jac.push_back(order_json(jacobi_number(om, i)));
  j["jacobi"] = jac;
  bool se = is_super_essential(om);
  j["superEssential"] = se;
  SubsystemResult s = super_essential_subsystem(om);
  j["subsystem"] = {{"indices", s.indices}, {"unique", s.unique}, {"rank", s.rank}, {"alternatives", s.alternatives}};
  if (se) {
    j["sparsity"] = sparsity_json(diagnose_sparsity(sys));
    j["fullProlongation"] = sparsity_json(diagnose_full_prolongation(sys));
  }
  return j;
}

Json ps_json(const DiffSystem& sys, const ProlongedSystem& ps) {
  Json j;
  j["J"] = ps.J;
  j["gammaPerVariable"] = ps.gamma_j;
  j["gamma"] = ps.gamma;
  j["m"] = ps.m;
  j["M"] = ps.M;
  j["L"] = ps.L;
  Json polys = Json::array();
  for (std::size_t t = 0; t < ps.polys.size(); ++t) {
    auto [i, k] = ps.index[t];
    polys.push_back({{"name", ps_name(sys, i, k)}, {"equation", i}, {"derivative", k}, {"poly", ps.polys[t].str()}});
  }
  j["polys"] = polys;
  Json w = Json::array();
  for (const auto& v : ps.window) w.push_back(v.name());
  j["window"] = w;
  return j;
}

Json ags_json(const AgsSystem& ags, const SpecializationTable& xi, const std::vector<MixedVolume>* mvs) {
  Json j;
  j["L"] = ags.L;
  Json ups = Json::array();
  for (std::size_t m = 0; m < ags.upsilon.size(); ++m)
    ups.push_back({{"y", "y" + std::to_string(m + 1)}, {"variable", ags.upsilon[m].name()}});
  j["upsilon"] = ups;
  Json ps = Json::array();
  for (const auto& P : ags.P) {
    Json terms = Json::array();
    for (std::size_t h = 0; h < P.terms.size(); ++h) {
      Variable c = P.coeff(static_cast<int>(h));
      terms.push_back({{"coeff", c.name()}, {"monomial", MultiPoly(P.terms[h]).str()}, {"exponent", P.support[h]},
                       {"xi", xi(c).str()}});
    }
    Json e = {{"l", P.l}, {"equation", P.source_i}, {"derivative", P.source_k}, {"poly", P.poly.str()}, {"terms", terms}};
    if (mvs) e["mixedVolumeMinus"] = rational_str((*mvs)[static_cast<std::size_t>(P.l - 1)].value);
    ps.push_back(e);
  }
  j["polys"] = ps;
  std::vector<int> all;
  for (int l = 1; l <= ags.L; ++l) all.push_back(l);
  j["algebraicallyEssential"] = is_algebraically_essential(ags.supports(), all);
  j["latticeIndex"] = lattice_index(ags.supports(), all).get_str();
  return j;
}

Json det_json(const Elimination& e, const std::vector<MixedVolume>* mvs) {
  Json j;
  j["l"] = e.l;
  j["size"] = e.matrix.size();
  j["rowsOfDistinguished"] = e.matrix.rows_of(e.l);
  j["determinant"] = factored_json(e.det);
  j["degreeInDistinguished"] = order_json(e.det.is_zero() ? kNegInf : degree_in_family(e.det, e.l));
  j["vanishesAtEpsilon"] = e.det_member;
  if (mvs) j["mixedVolumeMinus"] = rational_str((*mvs)[static_cast<std::size_t>(e.l - 1)].value);
  return j;
}

Json elimination_json(const Elimination& e) {
  Json j;
  j["l"] = e.l;
  j["determinantZero"] = e.det.is_zero();
  j["method"] = e.det.is_zero() ? "none" : (e.via_algorithm ? "algorithm" : "direct");
  Json d = Json::array();
  for (const auto& s : e.deflations) d.push_back({{"coeff", s.coeff.name()}, {"multiplicity", s.s}, {"factor", s.factor}});
  j["deflations"] = d;
  j["output"] = factored_json(e.output);
  j["verified"] = e.verified ? Json(*e.verified) : Json(nullptr);
  Json tau = Json::array();
  for (int t : e.tau) tau.push_back(order_json(t));
  j["tau"] = tau;
  return j;
}

Json bounds_json(const DiffSystem& sys, const BoundsReport& r) {
  Json per = Json::array();
  for (std::size_t i = 0; i < r.per_equation.size(); ++i) {
    const EquationBounds& b = r.per_equation[i];
    Json mv = Json::array();
    for (const auto& v : b.mixed_volumes) mv.push_back(rational_str(v));
    per.push_back({{"equation", sys.names.at(i)},
                   {"jacobiMinusGamma", b.jacobi_minus_gamma},
                   {"observedOrder", order_json(b.observed_order)},
                   {"tau", order_json(b.tau)},
                   {"degreeBound", rational_str(b.degree_bound)},
                   {"mixedVolumes", mv},
                   {"chainHolds", b.chain_holds}});
  }
  return {{"perPolynomial", per},
          {"verified", r.verified},
          {"assumption", "codimension one of the elimination ideal is assumed, not decided"}};
}

Json factor_report_json(const FactorReport& r) {
  Json fs = Json::array();
  for (const auto& c : r.factors)
    fs.push_back({{"factor", c.factor.str()},
                  {"multiplicity", c.multiplicity},
                  {"vanishesAtEpsilon", c.vanishes_at_epsilon},
                  {"specialized", c.specialized.str()},
                  {"vanishesAtZeta", c.vanishes_at_zeta ? Json(*c.vanishes_at_zeta) : Json(nullptr)}});
  return {{"factors", fs}, {"cofactor", r.cofactor.str()}, {"productMatches", r.product_matches}};
}

Json report_header(const std::string& command, Pipeline& p) {
  Json j;
  j["schema"] = 1;
  j["command"] = command;
  j["seed"] = p.options().seed;
  j["input"] = print_system(p.input());
  return j;
}

}  // namespace diffelim
