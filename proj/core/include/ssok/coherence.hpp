#pragma once
#include <map>
#include <string>

#include "ssok/ext.hpp"

namespace ssok {

// pi0-level probe of the coherence square
//
//   Ext(id_Y) --> Ext(g)
//       |           |
//       v           v
//    Ext(f) --> Ext(g o f)
//
// for composable active f: <j> -> <k>, g: <k> -> <l>. Builds the four
// categories, the comparison maps on objects, checks they descend to pi0
// and that the induced square of sets is a pushout (a necessary condition
// for homotopy cocartesianness).
struct CoherenceReport {
  bool ok = false;
  bool square_commutes = false;
  bool maps_descend = false;
  bool pushout = false;
  int pi0_id = 0, pi0_g = 0, pi0_f = 0, pi0_gf = 0;
  std::string detail;
};

CoherenceReport coherence_probe(const DiscreteOperad& O, const OpMor& f,
                                const OpMor& g);

// the same probe with the Ext graphs cached across calls (keyed by the
// name of sigma; one cache per operad)
using ExtCache = std::map<std::string, ExtGraph>;
CoherenceReport coherence_probe(const DiscreteOperad& O, const OpMor& f,
                                const OpMor& g, ExtCache& cache);

}  // namespace ssok
