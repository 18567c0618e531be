#pragma once
#include <json.hpp>

#include "ssok/smap.hpp"

namespace ssok {

// Generating classes of (marked) anodyne maps. The sharp horn classes carry
// one marked edge: 0 -> 1 for the left outer horn, (n-1) -> n for the right.
enum class GenClass {
  Cell,            // boundary inclusions
  InnHorn,         // inner horns, unmarked
  CellFlat,        // boundary inclusions, flat marking
  InnHornFlat,     // inner horns, flat marking
  LHornSharp,      // outer horn at 0 with 0 -> 1 marked
  RHornSharp,      // outer horn at n with (n-1) -> n marked
  MarkedTriangle,  // marks the long edge of a triangle with marked legs
  KanMark          // remarks a finite complex checked to be Kan up to a bound
};

enum class AnodyneClass { Inner, Marked, RightMarked, LeftMarked };

std::string to_string(GenClass g);
std::string to_string(AnodyneClass c);
GenClass gen_class_from_string(const std::string& s);
AnodyneClass anodyne_class_from_string(const std::string& s);

// which generators may appear in a certificate of the given class
bool generator_allowed(GenClass g, AnodyneClass cls);

// the generator instance as an inclusion of marked simplicial sets
// (KanMark takes the complex explicitly and is not enumerable here)
SimplicialMap generator_instance(GenClass g, int n, int k);

// One pushout of a generator, in the coordinates of the ambient target:
// horn steps name the top cell being attached, the triangle step names the
// triangle whose long edge gets marked, Kan steps list the subcomplex.
struct AttachmentStep {
  GenClass cls = GenClass::InnHorn;
  int n = 0, k = 0;
  int cell = -1;
  std::vector<int> kan_cells;
  int kan_bound = 0;
};

struct AttachmentCertificate {
  SimplicialMap incl;  // the monomorphism under test
  AnodyneClass target_class = AnodyneClass::Inner;
  std::vector<AttachmentStep> steps;
};

struct Verdict {
  bool ok = false;
  int failed_step = -1;  // -1: precondition or completeness failure
  std::string error;
};

Verdict verify_certificate(const AttachmentCertificate& cert);

// Growing subcomplex of a fixed target, used by replay and search.
struct Stage {
  const SimplicialSet* T = nullptr;
  std::vector<char> has;
  std::set<int> marks;

  bool complete() const;
  // also validates incl as a monomorphism into T
  static std::optional<Stage> from_inclusion(const SimplicialMap& incl,
                                             std::string* err);
};

// applies one step; returns an error description on an illegal step
std::optional<std::string> apply_step(Stage& st, const AttachmentStep& step,
                                      AnodyneClass cls);

nlohmann::json certificate_to_json(const AttachmentCertificate& cert);
AttachmentCertificate certificate_from_json(const nlohmann::json& j);
nlohmann::json smap_to_json(const SimplicialMap& f);
SimplicialMap smap_from_json(const nlohmann::json& j);

}  // namespace ssok
