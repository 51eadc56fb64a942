#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "diffelim/errors.hpp"
#include "diffelim/parser.hpp"
#include "diffelim/report.hpp"

using namespace diffelim;

namespace {

enum Exit { kOk = 0, kInternal = 1, kValidation = 2, kDegenerate = 3, kVanished = 4 };

struct Args {
  std::string system_file;
  std::uint64_t seed = 1;
  std::string distinguished = "all";
  std::string mode;
  std::string json_path;
  std::string ps_order = "descending";
  std::string var_order = "order";
  int max_attempts = 16;
  std::string poly_file, factors_file, num_file, den_file;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("io", "cannot read " + path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

// Polynomials separated by ';' or blank lines; '#' starts a comment.
std::vector<MultiPoly> read_polys(const std::string& path, const DiffSystem* ctx) {
  std::string text;
  std::istringstream in(slurp(path));
  for (std::string line; std::getline(in, line);) {
    auto h = line.find('#');
    if (h != std::string::npos) line.erase(h);
    bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
    text += blank ? ";" : line + "\n";
  }
  std::vector<MultiPoly> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string::npos) end = text.size();
    std::string part = text.substr(start, end - start);
    if (part.find_first_not_of(" \t\r\n") != std::string::npos) out.push_back(parse_poly(part, ctx));
    start = end + 1;
  }
  return out;
}

PipelineOptions options_of(const Args& a) {
  PipelineOptions o;
  o.seed = a.seed;
  if (a.distinguished != "all") {
    std::stringstream s(a.distinguished);
    for (std::string tok; std::getline(s, tok, ',');) {
      try {
        std::size_t used = 0;
        int l = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        o.distinguished.push_back(l);
      } catch (const std::exception&) {
        throw ValidationError("option", "--distinguished expects an index, a comma list or 'all'");
      }
    }
  }
  if (a.mode == "generic") o.mode = Mode::kGeneric;
  else if (a.mode == "concrete") o.mode = Mode::kConcrete;
  else if (!a.mode.empty()) throw ValidationError("option", "--mode expects concrete or generic");
  if (a.ps_order == "ascending") o.ps_order = PsOrder::kAscending;
  else if (a.ps_order != "descending") throw ValidationError("option", "--ps-order expects ascending or descending");
  if (a.var_order == "variable") o.var_order = VarOrder::kByVariable;
  else if (a.var_order != "order") throw ValidationError("option", "--var-order expects order or variable");
  o.build.max_attempts = a.max_attempts;
  return o;
}

void write_json(const Args& a, const Json& j) {
  if (a.json_path.empty()) return;
  std::ofstream out(a.json_path);
  if (!out) throw ValidationError("io", "cannot write " + a.json_path);
  out << j.dump(2) << "\n";
}

void print_order_row(const std::vector<int>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) std::cout << (i ? " " : "") << (v[i] <= kNegInf ? "-inf" : std::to_string(v[i]));
}

int run_stages(const std::string& cmd, const Args& a, Pipeline& p) {
  Json j = report_header(cmd, p);

  if (cmd == "analyze") {
    const SubsystemResult& sub = p.subsystem();
    j["analysis"] = analysis_json(p.extracted() ? p.input() : p.system());
    j["extracted"] = p.extracted();
    if (p.extracted()) j["extractedAnalysis"] = analysis_json(p.system());
    auto J = jacobi_numbers(order_matrix(p.input()));
    std::cout << "jacobi: ";
    print_order_row(J);
    std::cout << "\nsuper essential: " << (is_super_essential(p.input()) ? "yes" : "no") << "\nsubsystem:";
    for (int i : sub.indices) std::cout << " " << p.input().names.at(static_cast<std::size_t>(i - 1));
    std::cout << (sub.unique ? " (unique)" : " (not unique)") << "\n";
  } else if (cmd == "extend") {
    const ProlongedSystem& ps = p.ps();
    j["extracted"] = p.extracted();
    j["ps"] = ps_json(p.system(), ps);
    std::cout << "L = " << ps.L << ", gamma = " << ps.gamma << "\n";
    for (const auto& e : j["ps"]["polys"]) std::cout << e["name"].get<std::string>() << " = " << e["poly"].get<std::string>() << "\n";
  } else if (cmd == "ags") {
    j["ags"] = ags_json(p.ags(), p.xi(), &p.mixed_volumes());
    for (const auto& P : p.ags().P)
      std::cout << "P" << P.l << " = " << P.poly << "   MV_-" << P.l << " = "
                << rational_str(p.mixed_volumes()[static_cast<std::size_t>(P.l - 1)].value) << "\n";
  } else if (cmd == "matrix") {
    Json ms = Json::array();
    for (int l : p.distinguished()) {
      const SylvesterMatrix& m = p.matrix(l);
      MatrixCheck c = check_matrix(m, p.ags());
      Json mj = to_json(m);
      mj["check"] = {{"square", c.square}, {"supportContained", c.support_contained}, {"rowCounts", c.row_counts}};
      ms.push_back(mj);
      std::cout << "S_" << l << ": " << m.size() << "x" << m.size() << ", rows per polynomial:";
      for (int r : c.row_counts) std::cout << " " << r;
      std::cout << ", liftings tried " << m.attempts << "\n";
    }
    j["matrices"] = ms;
  } else if (cmd == "det") {
    Json ds = Json::array();
    const auto& mvs = p.mixed_volumes();
    for (int l : p.distinguished()) {
      const Elimination& e = p.determinant(l);
      ds.push_back(det_json(e, &mvs));
      std::cout << "D_" << l << ": " << (e.det.is_zero() ? "zero" : "nonzero") << ", " << e.det.factors.size()
                << " factor(s), degree in C_" << l << " = "
                << (e.det.is_zero() ? std::string("-inf") : std::to_string(degree_in_family(e.det, l)))
                << ", vanishes at epsilon: " << (e.det_member ? "yes" : "no") << "\n";
    }
    j["determinants"] = ds;
  } else if (cmd == "eliminate") {
    Json es = Json::array();
    for (const Elimination* e : p.eliminate_all()) {
      es.push_back(elimination_json(*e));
      std::cout << "H_" << e->l << " = " << factored_str(e->output) << "\n";
    }
    j["eliminations"] = es;
  } else if (cmd == "bounds") {
    if (p.system().mode != Mode::kGeneric) throw ConfigurationError("bounds need a generic system; pass --mode generic");
    Json bs = Json::array();
    for (const Elimination* e : p.eliminate_all()) {
      if (e->output.is_zero()) continue;
      BoundsReport r = bounds_report(p.system(), p.ps(), p.ags(), p.mixed_volumes(), e->output, e->tau);
      Json b = bounds_json(p.system(), r);
      b["l"] = e->l;
      bs.push_back(b);
      std::cout << "l = " << e->l << ":";
      for (std::size_t i = 0; i < r.per_equation.size(); ++i) {
        const auto& q = r.per_equation[i];
        std::cout << "  " << p.system().names[i] << " ord "
                  << (q.observed_order <= kNegInf ? std::string("-inf") : std::to_string(q.observed_order)) << " <= "
                  << q.jacobi_minus_gamma << ", deg <= " << rational_str(q.degree_bound);
      }
      std::cout << (r.verified ? "  [verified]" : "  [unverified]") << "\n";
    }
    j["bounds"] = bs;
  } else if (cmd == "verify") {
    if (a.poly_file.empty()) throw ValidationError("option", "verify needs --poly <file>");
    auto polys = read_polys(a.poly_file, &p.system());
    Json vs = Json::array();
    for (const auto& q : polys) {
      Json v = {{"poly", q.str()}};
      bool over_c = false, differential = false;
      for (const auto& x : q.variables()) {
        if (x.kind == VarKind::GenCoeff) over_c = true;
        else differential = true;
      }
      if (over_c && !differential) {
        bool e = vanishes_at_generic_zero(q, p.ags());
        v["vanishesAtEpsilon"] = e;
        std::cout << "epsilon: " << (e ? "vanishes" : "does not vanish") << "\n";
        if (!a.factors_file.empty()) {
          FactorReport r = verify_factors(q, read_polys(a.factors_file, &p.system()), p.xi(), p.ags(), &p.system());
          v["factors"] = factor_report_json(r);
          for (const auto& c : r.factors)
            std::cout << "factor " << c.factor << ": multiplicity " << c.multiplicity << ", epsilon "
                      << (c.vanishes_at_epsilon ? "vanishes" : "nonzero") << "\n";
        }
      } else if (p.system().mode == Mode::kGeneric) {
        bool z = diff_generic_zero_eval(q, p.system()).is_zero();
        v["vanishesAtZeta"] = z;
        std::cout << "zeta: " << (z ? "vanishes" : "does not vanish") << "\n";
      } else {
        v["vanishesAtZeta"] = nullptr;
        std::cout << "membership unverified: the differential generic zero needs a generic system\n";
      }
      vs.push_back(v);
    }
    j["verify"] = vs;
  } else if (cmd == "divide") {
    if (a.num_file.empty() || a.den_file.empty()) throw ValidationError("option", "divide needs --num and --den");
    auto num = read_polys(a.num_file, &p.system());
    auto den = read_polys(a.den_file, &p.system());
    if (num.size() != 1 || den.size() != 1) throw ValidationError("shape", "divide expects one polynomial per file");
    if (den[0].is_zero()) throw ValidationError("shape", "division by zero");
    auto q = exact_divide(num[0], den[0]);
    Json d = {{"divisible", q.has_value()}};
    if (q) {
      d["quotient"] = q->str();
      if (p.system().mode == Mode::kGeneric) d["quotientVanishesAtZeta"] = diff_generic_zero_eval(*q, p.system()).is_zero();
      std::cout << *q << "\n";
    } else {
      std::cout << "not divisible\n";
    }
    j["divide"] = d;
  }
  write_json(a, j);
  return kOk;
}

int run(const std::string& cmd, const Args& a, std::string& stage) {
  DiffSystem sys = parse_system(slurp(a.system_file));
  stage = "options";
  Pipeline p(sys, options_of(a));
  try {
    return run_stages(cmd, a, p);
  } catch (...) {
    stage = p.stage();
    throw;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differential elimination through sparse resultant matrices"};
  app.require_subcommand(1, 1);
  Args a;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"analyze", "order matrix, Jacobi numbers, super-essential subsystem, sparsity"},
      {"extend", "prolonged system ps"},
      {"ags", "generic algebraic system and mixed volumes"},
      {"matrix", "Sylvester-style matrices"},
      {"det", "determinants and generic-zero membership"},
      {"eliminate", "specialized determinants in the elimination ideal"},
      {"bounds", "order and degree bounds (generic mode)"},
      {"verify", "generic-zero tests for given polynomials"},
      {"divide", "exact division of two polynomials"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_option("system", a.system_file, "system file")->required()->check(CLI::ExistingFile);
    s->add_option("--seed", a.seed, "lifting seed");
    s->add_option("--distinguished", a.distinguished, "index l, comma list, or all");
    s->add_option("--mode", a.mode, "concrete or generic");
    s->add_option("--json", a.json_path, "write the JSON report here");
    s->add_option("--ps-order", a.ps_order, "derivatives of one equation: descending or ascending");
    s->add_option("--var-order", a.var_order, "numbering of y's: order or variable");
    s->add_option("--max-attempts", a.max_attempts, "liftings tried before giving up");
    if (name == "verify") {
      s->add_option("--poly", a.poly_file, "polynomials to test");
      s->add_option("--factors", a.factors_file, "candidate factors of the first polynomial");
    }
    if (name == "divide") {
      s->add_option("--num", a.num_file, "dividend");
      s->add_option("--den", a.den_file, "divisor");
    }
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kValidation;
  }
  std::string cmd = app.get_subcommands().front()->get_name();
  std::string stage = "parse";
  auto where = [&] { return " [" + stage + "]"; };
  try {
    return run(cmd, a, stage);
  } catch (const NotSuperEssential& e) {
    std::cerr << "diffelim: validation error" << where() << ": " << e.what() << "\n";
    return kValidation;
  } catch (const ValidationError& e) {
    std::cerr << "diffelim: validation error (" << e.tag() << ")" << where() << ": " << e.what() << "\n";
    return kValidation;
  } catch (const ConfigurationError& e) {
    std::cerr << "diffelim: configuration error" << where() << ": " << e.what() << "\n";
    return kValidation;
  } catch (const DegenerateConfiguration& e) {
    std::cerr << "diffelim: degenerate configuration" << where() << ": " << e.what() << "\n";
    return kDegenerate;
  } catch (const VanishedError& e) {
    std::cerr << "diffelim: vanished" << where() << ": " << e.what() << "\n";
    return kVanished;
  } catch (const std::exception& e) {
    std::cerr << "diffelim: internal error" << where() << ": " << e.what() << "\n";
    return kInternal;
  }
}
