#pragma once

#include <string>
#include <utility>
#include <vector>

#include "twomon/twocat.hpp"

namespace twomon::fixtures {

/// One object, one 1-cell, one 2-cell.
RawTwoCategory raw_k_term();
/// Objects X, Y; f, g: X -> Y; alpha: f => g.
RawTwoCategory raw_k_cell();
/// Objects a, b; u, v: a -> b.
RawTwoCategory raw_k_pair();
/// One object; 1-cells e (identity) and t with t.t = t.
RawTwoCategory raw_k_idem();
/// Objects a, b; u, v: a -> b; alpha, beta: u => v.
RawTwoCategory raw_k_parallel_cells();

TwoCatPtr k_term();
TwoCatPtr k_cell();
TwoCatPtr k_pair();
TwoCatPtr k_idem();
TwoCatPtr k_parallel_cells();
/// X and X' isomorphic via i, j; every 1-cell f carries an involution s_f.
TwoCatPtr k_iso();
/// One object, 1-cells {e, z} with z.z = e, identity 2-cells.
TwoCatPtr k_z2();
/// k_cell x k_z2.
TwoCatPtr k_twist();
/// k_cell x (0 -> 1); carries the monad reflecting onto the 1 side.
TwoCatPtr k_reflect();
/// Full sub-2-category of Cat on {1, 2}.
const CatFull& k_cat12();

/// Locally discrete shapes: empty, one, discrete2, arrow, parallel, chain3.
TwoCatPtr shape(const std::string& name);
std::vector<std::string> shape_names();

/// Base 2-categories of the theorem sweeps, by name.
std::vector<std::pair<std::string, TwoCatPtr>> base_fixtures();

}  // namespace twomon::fixtures
