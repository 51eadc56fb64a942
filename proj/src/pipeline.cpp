#include "diffelim/pipeline.hpp"

#include <algorithm>

#include "diffelim/errors.hpp"
#include "diffelim/parser.hpp"

namespace diffelim {

Pipeline::Pipeline(DiffSystem input, PipelineOptions opts) : input_(std::move(input)), opts_(std::move(opts)) {}

const SubsystemResult& Pipeline::subsystem() {
  if (!sub_) {
    enter("extract");
    DiffSystem s = input_;
    if (opts_.mode == Mode::kGeneric && s.mode != Mode::kGeneric) make_generic(s);
    if (opts_.mode == Mode::kConcrete) s.mode = Mode::kConcrete;
    sub_ = super_essential_subsystem(s);
    if (sub_->indices.empty()) throw ConfigurationError("no super-essential subsystem");
    if (static_cast<int>(sub_->indices.size()) == s.n() && is_super_essential(s)) {
      system_ = std::move(s);
    } else {
      extracted_ = true;
      system_ = s.restrict_to(sub_->indices);
      if (!is_super_essential(*system_))
        throw NotSuperEssential(sub_->indices, "extracted subsystem is not super essential");
    }
  }
  return *sub_;
}

const DiffSystem& Pipeline::system() {
  subsystem();
  return *system_;
}

bool Pipeline::extracted() {
  subsystem();
  return extracted_;
}

const ProlongedSystem& Pipeline::ps() {
  if (!ps_) {
    const DiffSystem& s = system();
    enter("extend");
    ps_ = build_ps(s, opts_.ps_order);
  }
  return *ps_;
}

const AgsSystem& Pipeline::ags() {
  if (!ags_) {
    const ProlongedSystem& p = ps();
    enter("ags");
    ags_ = build_ags(p, opts_.var_order);
    elim_.assign(static_cast<std::size_t>(ags_->L), std::nullopt);
    have_det_.assign(static_cast<std::size_t>(ags_->L), 0);
    have_out_.assign(static_cast<std::size_t>(ags_->L), 0);
  }
  return *ags_;
}

const SpecializationTable& Pipeline::xi() {
  if (!xi_) {
    const AgsSystem& a = ags();
    enter("specialize");
    xi_ = build_xi(ps(), a, system().mode);
  }
  return *xi_;
}

const std::vector<MixedVolume>& Pipeline::mixed_volumes() {
  if (!mvs_) {
    const AgsSystem& a = ags();
    enter("mixed-volume");
    mvs_ = mixed_volumes_minus(a);
  }
  return *mvs_;
}

std::vector<int> Pipeline::distinguished() {
  const int L = ags().L;
  std::vector<int> ls = opts_.distinguished;
  if (ls.empty())
    for (int l = 1; l <= L; ++l) ls.push_back(l);
  for (int l : ls)
    if (l < 1 || l > L)
      throw ValidationError("option", "distinguished index " + std::to_string(l) + " outside 1.." + std::to_string(L));
  return ls;
}

Elimination& Pipeline::slot(int l) {
  const int L = ags().L;
  if (l < 1 || l > L) throw ValidationError("option", "distinguished index " + std::to_string(l) + " out of range");
  auto& e = elim_[static_cast<std::size_t>(l - 1)];
  if (!e) {
    enter("matrix");
    SylvesterMatrix m = build_sylvester(ags(), l, opts_.seed, opts_.build);
    e.emplace();
    e->l = l;
    e->matrix = std::move(m);
  }
  return *e;
}

const SylvesterMatrix& Pipeline::matrix(int l) { return slot(l).matrix; }

const Elimination& Pipeline::determinant(int l) {
  Elimination& e = slot(l);
  if (!have_det_[static_cast<std::size_t>(l - 1)]) {
    enter("det");
    e.det = diffelim::determinant(e.matrix);
    e.det_member = verify_membership(e.det, ags());
    if (!e.det.is_zero() && !e.det_member)
      throw ConsistencyError("determinant " + std::to_string(l) + " does not vanish at the generic zero");
    have_det_[static_cast<std::size_t>(l - 1)] = 1;
  }
  return e;
}

const Elimination& Pipeline::eliminate(int l) {
  determinant(l);
  Elimination& e = slot(l);
  if (!have_out_[static_cast<std::size_t>(l - 1)]) {
    enter("eliminate");
    if (!e.det.is_zero()) {
      e.tau = tau_of(e.det, ags());
      e.output = specialize(e.det, xi(), ags());
      if (e.output.is_zero()) {
        SpecializeOutcome o = algorithm_specialize(e.det, xi(), ags(), false);
        e.output = std::move(o.value);
        e.deflations = std::move(o.deflations);
        e.via_algorithm = true;
      }
      if (system().mode == Mode::kGeneric && !e.output.is_zero()) {
        enter("verify");
        DiffGenericZero z(system());
        bool v = false;
        for (const auto& [f, m] : e.output.factors)
          if (z.eval(f).is_zero()) {
            v = true;
            break;
          }
        e.verified = v;
      }
    }
    have_out_[static_cast<std::size_t>(l - 1)] = 1;
  }
  return e;
}

std::vector<const Elimination*> Pipeline::eliminate_all() {
  std::vector<const Elimination*> out;
  bool any = false;
  for (int l : distinguished()) {
    out.push_back(&eliminate(l));
    if (!out.back()->output.is_zero()) any = true;
  }
  if (!any) throw VanishedError("every determinant vanished; nothing to specialize");
  return out;
}

}  // namespace diffelim
