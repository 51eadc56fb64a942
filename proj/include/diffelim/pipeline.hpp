#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diffelim/specialize.hpp"
#include "diffelim/sylvester.hpp"

namespace diffelim {

struct PipelineOptions {
  std::uint64_t seed = 1;
  std::vector<int> distinguished;  // empty: every l
  std::optional<Mode> mode;        // generic turns a concrete system into the generic one
  PsOrder ps_order = PsOrder::kDescending;
  VarOrder var_order = VarOrder::kByOrder;
  BuildOptions build;
};

struct Elimination {
  int l = 0;
  SylvesterMatrix matrix;
  FactoredPoly det;
  bool det_member = false;  // vanishes at epsilon
  FactoredPoly output;      // zero when det is zero
  bool via_algorithm = false;
  std::vector<DeflationStep> deflations;
  std::optional<bool> verified;  // differential generic zero test; generic mode only
  std::vector<int> tau;
};

// Stages run on demand and keep their artifacts. `stage` names the last one entered, for
// error messages.
class Pipeline {
 public:
  Pipeline(DiffSystem input, PipelineOptions opts);

  const DiffSystem& input() const { return input_; }
  const PipelineOptions& options() const { return opts_; }
  std::string stage() const { return stage_; }

  // Mode conversion and super-essential extraction.
  const DiffSystem& system();
  const SubsystemResult& subsystem();
  bool extracted();
  const ProlongedSystem& ps();
  const AgsSystem& ags();
  const SpecializationTable& xi();
  const std::vector<MixedVolume>& mixed_volumes();
  std::vector<int> distinguished();  // resolved l* list

  const SylvesterMatrix& matrix(int l);
  const Elimination& determinant(int l);
  const Elimination& eliminate(int l);
  // Every requested l through elimination; throws VanishedError when no output is nonzero.
  std::vector<const Elimination*> eliminate_all();

 private:
  void enter(const char* s) { stage_ = s; }
  Elimination& slot(int l);

  DiffSystem input_;
  PipelineOptions opts_;
  std::string stage_ = "parse";
  std::optional<DiffSystem> system_;
  std::optional<SubsystemResult> sub_;
  bool extracted_ = false;
  std::optional<ProlongedSystem> ps_;
  std::optional<AgsSystem> ags_;
  std::optional<SpecializationTable> xi_;
  std::optional<std::vector<MixedVolume>> mvs_;
  std::vector<std::optional<Elimination>> elim_;
  std::vector<int> have_det_, have_out_;
};

}  // namespace diffelim
