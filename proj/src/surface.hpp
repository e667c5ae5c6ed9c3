#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homology.hpp"
#include "iet.hpp"

namespace windtree {

// Axis-aligned polygon model of the wind-tree surfaces. Each sheet is a unit
// square with the centered a x b hole removed. Outer edges glue within a
// sheet; hole edges glue across sheets (left<->right flips the x-sheet bit,
// bottom<->top flips the y-sheet bit). Y(a,b) is the same picture with a
// single sheet. Flow direction is (u, 1)/|.|, u = cot(theta), theta in (0, pi/2).
struct FlatModel {
  int nsheets = 4;  // 1 for Y, 4 for X; sheet index s = sx + 2*sy
  Ival a, b, u;
  Ival hx0, hx1, hy0, hy1;   // hole walls
  Ival xv, xcv, yh, ych;     // marked-curve positions (v, c_v, h, c_h)

  Ival comp_len() const { return Ival(1.0) - a; }   // section length per sheet
  Ival total_len() const { return comp_len() * Ival(static_cast<double>(nsheets)); }
  Ival pos_v() const { return xv - hx1; }            // v-curve position on the section
};

FlatModel make_y_model(const Ival& a, const Ival& b, const Ival& u);
FlatModel make_x_model(const Ival& a, const Ival& b, const Ival& u);

// The section is the horizontal level of the hole-bottom wall outside the
// hole, on every sheet: per sheet the segment [hx1, 1) followed by [0, hx0)
// (wrapping through the outer edge), anchored at the hole's bottom-right
// corner. Components are concatenated in sheet order into [0, nsheets*(1-a)).
struct SectionPoint {
  int sheet;
  Ival x;  // surface x-coordinate at the section level
};

Ival section_pos(const FlatModel& m, const Ival& x);           // within-component
Ival section_concat(const FlatModel& m, int sheet, const Ival& x);
SectionPoint section_from_concat(const FlatModel& m, const Ival& c);

using GenCount = std::array<int64_t, kNumGens>;

struct FlowResult {
  int sheet;
  Ival x;           // landing x at the section level
  Ival dy;          // total vertical extent traversed
  int64_t events;
  GenCount cross{}; // signed crossings with the 12 generator curves
  int64_t cell_dx = 0, cell_dy = 0;  // sheet-jump bookkeeping (hole crossings)
};

// Flow from a section point upward to the next section crossing.
FlowResult flow_to_section(const FlatModel& m, int sheet, const Ival& x0, int64_t max_events);
// Backward flow from a point (typically a singular corner) down to the
// first section crossing; only the landing is reported.
FlowResult backflow_to_section(const FlatModel& m, int sheet, const Ival& x0, const Ival& y0,
                               int64_t max_events);

// Signed crossings of the walk that closes a loop at a section point: along
// the component to its left anchor, then along the fixed connector tree to
// the component-0 anchor.
GenCount walk_closure(const FlatModel& m, int sheet, const Ival& x);
// Crossing table of the tree connector from sheet k's anchor to sheet 0's.
GenCount connector_crossings(const FlatModel& m, int sheet);

// First-return section of the flow, with the homology data of the return
// loops. `letters` are ordered by position; crossings are closed-loop
// pairings with the 12 generator curves (linear over canonical classes).
struct SectionData {
  FlatModel model;
  Iet iet;                       // domain [0, nsheets*(1-a)), not normalized
  std::vector<GenCount> cross;   // per letter: <gen, xi_alpha>
  std::vector<int> comp;         // component (sheet) of each letter
  std::vector<Ival> flight_dy;   // vertical extent of the return arc
  std::vector<int> invol_h, invol_v;  // alphabet involutions (X model only)

  int size() const { return iet.size(); }
  std::string to_text() const;
  static SectionData from_text(const std::string& text);
};

SectionData build_section(const FlatModel& m, int64_t max_events = 100000);

// Piecewise-constant cocycle of a homology class over the section letters.
std::vector<Ival> phi_of(const SectionData& sd, const HomologyClass& c);
// Integer variant; requires an integer class.
std::vector<int64_t> phi_of_int(const SectionData& sd, const HomologyClass& c);

}  // namespace windtree
