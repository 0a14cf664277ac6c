#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "twomon/cones.hpp"

namespace twomon {

/// A conical or weighted diagram together with its cone category at every
/// object of the base (computed once, unrestricted).
class LimitProblem {
 public:
  explicit LimitProblem(ConicalDiagram d);
  explicit LimitProblem(WeightedDiagram d);

  bool is_weighted() const { return std::holds_alternative<WeightedDiagram>(diagram_); }
  const ConicalDiagram& conical() const { return std::get<ConicalDiagram>(diagram_); }
  const WeightedDiagram& weighted() const { return std::get<WeightedDiagram>(diagram_); }
  const TwoCatPtr& base() const { return base_; }
  const ConeCategory& cones_at(int b) const { return cones_[static_cast<std::size_t>(b)]; }
  int ones() const { return ones_; }

 private:
  std::variant<ConicalDiagram, WeightedDiagram> diagram_;
  TwoCatPtr base_;
  std::vector<ConeCategory> cones_;
  int ones_ = 0;
};

/// Post-composition hom(B,L) → Cones(B,F) as explicit tables.
struct BTranscript {
  int b = -1;
  std::vector<int> objects;  // per 1-cell of hom(B,L): cone index or -1
  std::vector<int> arrows;   // per 2-cell of hom(B,L): cone morphism index or -1
  bool isomorphism = false;
};

struct CompatibilityResult {
  std::string family;
  bool direct = false;   // the Ω'-restricted post-composition is an isomorphism
  bool preimage = false; // Ω'-component morphisms have preimages in Ω'
  bool agree() const { return direct == preimage; }
  bool holds() const { return direct && preimage; }
  std::vector<std::string> witnesses;
};

struct LimitCertificate {
  std::shared_ptr<const LimitProblem> problem;
  int vertex = -1;
  std::vector<int> cone;
  std::vector<BTranscript> transcript;   // per object B
  std::vector<int> successful_vertices;  // every vertex admitting a limit cone
  std::vector<std::vector<int>> successful_cones;
  std::vector<CompatibilityResult> compatibility;
};

BTranscript transcribe(const LimitProblem& p, int vertex, const std::vector<int>& cone, int b);

/// Searches vertices in lexicographic order of names and cones in
/// enumeration order; the first universal cone wins.
std::optional<LimitCertificate> find_limit(std::shared_ptr<const LimitProblem> p);
std::optional<LimitCertificate> find_conical_limit(const ConicalDiagram& d);
std::optional<LimitCertificate> find_weighted_limit(const WeightedDiagram& d);

/// Certificate for a given candidate, whether or not it is a limit.
LimitCertificate certify(std::shared_ptr<const LimitProblem> p, int vertex, const std::vector<int>& cone);

struct LimitReport {
  bool cone_valid = false;
  bool universal = false;
  std::vector<std::string> failures;
  bool ok() const { return cone_valid && universal; }
};
LimitReport verify_limit(const LimitCertificate& c);

/// Ω'-compatibility computed directly and through preimages; the two must agree.
CompatibilityResult check_compatibility(const LimitCertificate& c, const CellFamily& omega_prime,
                                        const std::string& name = "");

/// The unique h: B → L with π∘h = the given cone, if any.
std::optional<int> mediator(const LimitCertificate& c, int b, const std::vector<int>& cone);
/// The unique β: h ⇒ h' with π∘β = the given components, if any.
std::optional<int> mediator_cell(const LimitCertificate& c, int b, int h, int h2, const std::vector<int>& comps);

// ---- special limits, checked through their elementary universal properties

enum class SpecialKind { product, inserter, iso_inserter, equifier };
std::string to_string(SpecialKind k);

struct SpecialData {
  SpecialKind kind = SpecialKind::product;
  std::vector<int> factors;  // product: objects
  int f = -1, g = -1;        // inserter: parallel 1-cells
  int alpha = -1, beta = -1; // equifier: parallel 2-cells
};
struct SpecialCandidate {
  int vertex = -1;
  std::vector<int> projections;  // product: p_i; inserter and equifier: {p}
  int lambda = -1;               // inserter
};
struct SpecialReport {
  bool cone_valid = false, one_dimensional = false, two_dimensional = false;
  std::vector<std::pair<std::string, bool>> compatible;
  std::vector<std::string> witnesses;
  bool ok() const { return cone_valid && one_dimensional && two_dimensional; }
};
SpecialReport special_limit_check(const TwoCategory& k, const SpecialData& d, const SpecialCandidate& c,
                                  const std::vector<std::pair<std::string, CellFamily>>& omega_primes = {});

}  // namespace twomon
