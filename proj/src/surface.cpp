#include "surface.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <sstream>

namespace windtree {

namespace {
Ival half(const Ival& v) { return v * 0.5; }

void check_param(const Ival& p, const char* name) {
  if (!(p.lo > 0.0 && p.hi < 1.0))
    fail(ErrorCode::InvalidParams, std::string(name) + " must lie strictly inside (0,1)");
}
}  // namespace

static FlatModel make_model(int nsheets, const Ival& a, const Ival& b, const Ival& u) {
  check_param(a, "a");
  check_param(b, "b");
  if (!(u.lo > 0.0)) fail(ErrorCode::InvalidParams, "direction parameter u = cot(theta) must be positive");
  FlatModel m;
  m.nsheets = nsheets;
  m.a = a;
  m.b = b;
  m.u = u;
  m.hx0 = half(Ival(1.0) - a);
  m.hx1 = half(Ival(1.0) + a);
  m.hy0 = half(Ival(1.0) - b);
  m.hy1 = half(Ival(1.0) + b);
  // marked curves, placed away from walls and from each other
  m.xv = half(m.hx1 + Ival(1.0));
  m.xcv = half(m.hx0 + m.hx1);
  m.yh = half(m.hy1 + Ival(1.0));
  m.ych = half(m.hy0 + m.hy1);
  return m;
}

FlatModel make_y_model(const Ival& a, const Ival& b, const Ival& u) { return make_model(1, a, b, u); }
FlatModel make_x_model(const Ival& a, const Ival& b, const Ival& u) { return make_model(4, a, b, u); }

Ival section_pos(const FlatModel& m, const Ival& x) {
  // [hx1, 1) -> x - hx1 ; [0, hx0) -> x + (1 - hx1). Valid section points are
  // never inside the hole span, so the hole centre separates the two cases.
  if (x.mid() > m.xcv.mid()) return x - m.hx1;
  return x + (Ival(1.0) - m.hx1);
}

Ival section_concat(const FlatModel& m, int sheet, const Ival& x) {
  return Ival(static_cast<double>(sheet)) * m.comp_len() + section_pos(m, x);
}

SectionPoint section_from_concat(const FlatModel& m, const Ival& c) {
  const double comp_len = m.comp_len().mid();
  int sheet = static_cast<int>(c.mid() / comp_len);
  sheet = std::min(std::max(sheet, 0), m.nsheets - 1);
  Ival pos = c - Ival(static_cast<double>(sheet)) * m.comp_len();
  // pos in [0, 1-a): x = hx1 + pos, wrapped at 1
  Ival x = m.hx1 + pos;
  if (x.mid() >= 1.0) x = x - 1.0;
  return SectionPoint{sheet, x};
}

namespace {

constexpr int64_t kNoCurve = -1;

struct Stepper {
  const FlatModel& m;
  int sheet;
  Ival x, y;
  bool count;       // accumulate generator crossings
  GenCount cross{};
  Ival dy_total{0.0};
  int64_t events = 0;

  Stepper(const FlatModel& mm, int s, Ival xx, Ival yy, bool cnt)
      : m(mm), sheet(s), x(xx), y(yy), count(cnt) {}

  int sx() const { return sheet & 1; }
  int sy() const { return sheet >> 1; }

  void add_cross(int gen, int64_t v) { cross[gen] += v; }

  // crossings along a monotone flow segment (dir = +1 up-right, -1 down-left)
  void segment_cross(const Ival& x1, const Ival& y1, const Ival& x2, const Ival& y2, int dir) {
    if (!count) return;
    const Ival xlo = dir > 0 ? x1 : x2, xhi = dir > 0 ? x2 : x1;
    const Ival ylo = dir > 0 ? y1 : y2, yhi = dir > 0 ? y2 : y1;
    auto strictly_between = [&](const Ival& c, const Ival& lo, const Ival& hi) {
      const Order a = compare(lo, c), b = compare(c, hi);
      if (a == Order::Less && b == Order::Less) return 1;
      if (a == Order::Greater || b == Order::Greater) return 0;
      if (lo.mid() == hi.mid()) return 0;  // degenerate segment
      fail(ErrorCode::SingularHit, "flow segment grazes a marked curve");
    };
    // vertical curves: <v-up, rightward> = -1
    if (strictly_between(m.xv, xlo, xhi)) add_cross(V00 + sheet, -dir);
    if (strictly_between(m.xcv, xlo, xhi)) add_cross(CV0 + sx(), -dir);
    // horizontal curves: <h-right, upward> = +1
    if (strictly_between(m.yh, ylo, yhi)) add_cross(H00 + sheet, dir);
    if (strictly_between(m.ych, ylo, yhi)) add_cross(CH0 + sy(), dir);
  }
};

enum class EvType { Section, HoleBottomGlue, TopWrap, RightWrap, HoleLeftGlue,
                    BottomWrap, LeftWrap, HoleTopGlue, HoleRightGlue };

struct Cand {
  EvType type;
  Ival dy;      // positive vertical extent of the sub-segment
};

// Certified minimum. A tie between the two outer wraps (or between a section
// crossing and the x-wrap) is the orbit passing through the regular torus
// corner / the section seam; those merge into one event. Any other tie is a
// genuine singular corner.
std::pair<int, int> pick_min(const std::vector<Cand>& cands) {
  int best = 0;
  for (size_t i = 1; i < cands.size(); ++i)
    if (cands[i].dy.mid() < cands[best].dy.mid()) best = static_cast<int>(i);
  int tied = -1;
  for (size_t i = 0; i < cands.size(); ++i) {
    if (static_cast<int>(i) == best) continue;
    const Order o = compare(cands[i].dy, cands[best].dy);
    if (o == Order::Greater) continue;
    if (tied >= 0) fail(ErrorCode::SingularHit, "multiple flow events coincide (corner hit)");
    tied = static_cast<int>(i);
  }
  return {best, tied};
}

bool wrap_pair(EvType a, EvType b, EvType ta, EvType tb) {
  return (a == ta && b == tb) || (a == tb && b == ta);
}

}  // namespace

FlowResult flow_to_section(const FlatModel& m, int sheet, const Ival& x0, int64_t max_events) {
  Stepper st(m, sheet, x0, Ival(m.hy0), m.nsheets == 4);
  bool at_start = true;
  while (st.events < max_events) {
    ++st.events;
    std::vector<Cand> cands;
    // next section-level crossing (only reachable from below)
    if (!at_start && certainly_less(st.y, m.hy0)) cands.push_back({EvType::Section, m.hy0 - st.y});
    cands.push_back({EvType::TopWrap, Ival(1.0) - st.y});
    cands.push_back({EvType::RightWrap, (Ival(1.0) - st.x) / m.u});
    if (certainly_less(st.x, m.hx0)) {
      const Ival dy = (m.hx0 - st.x) / m.u;
      const Ival yat = st.y + dy;
      const Order lo = compare(Ival(m.hy0), yat), hi = compare(yat, Ival(m.hy1));
      if (lo == Order::Less && hi == Order::Less) cands.push_back({EvType::HoleLeftGlue, dy});
      else if (lo == Order::Ambiguous || hi == Order::Ambiguous) {
        // only fatal if this wall could fire first
        bool could_win = true;
        for (const Cand& c : cands)
          if (certainly_less(c.dy, dy)) { could_win = false; break; }
        if (could_win) fail(ErrorCode::SingularHit, "orbit grazes a hole corner");
      }
    }
    const auto [best, tied] = pick_min(cands);
    Cand ev = cands[best];
    bool also_right_wrap = false;
    if (tied >= 0) {
      const EvType other = cands[tied].type;
      if (wrap_pair(ev.type, other, EvType::TopWrap, EvType::RightWrap) ||
          wrap_pair(ev.type, other, EvType::Section, EvType::RightWrap)) {
        // regular passage through the outer corner or the section seam:
        // fold the x-wrap into the other event
        also_right_wrap = true;
        if (ev.type == EvType::RightWrap) ev = cands[tied];
        ev.dy = Ival::hull(ev.dy, cands[tied].dy);
      } else {
        fail(ErrorCode::SingularHit, "two flow events coincide within enclosures (corner hit)");
      }
    }
    Ival x2 = st.x + ev.dy * m.u;
    const Ival y2 = st.y + ev.dy;
    st.segment_cross(st.x, st.y, x2, y2, +1);
    st.dy_total += ev.dy;
    at_start = false;
    if (also_right_wrap) x2 = x2 - 1.0;
    switch (ev.type) {
      case EvType::Section: {
        const Order lo = compare(Ival(m.hx0), x2), hi = compare(x2, Ival(m.hx1));
        if (lo == Order::Less && hi == Order::Less) {
          // hole bottom: glue to the hole top, flipping the y-sheet bit
          st.x = x2;
          st.y = m.hy1;
          if (m.nsheets == 4) st.sheet ^= 2;
        } else if (lo == Order::Greater || hi == Order::Greater) {
          FlowResult out;
          out.sheet = st.sheet;
          out.x = x2;
          out.dy = st.dy_total;
          out.events = st.events;
          out.cross = st.cross;
          return out;
        } else {
          fail(ErrorCode::SingularHit, "orbit hits a hole corner at the section level");
        }
        break;
      }
      case EvType::TopWrap:
        st.x = x2;
        st.y = Ival(0.0);
        break;
      case EvType::RightWrap:
        st.x = Ival(0.0);
        st.y = y2;
        break;
      case EvType::HoleLeftGlue:
        st.x = m.hx1;
        st.y = y2;
        if (m.nsheets == 4) st.sheet ^= 1;
        break;
      default:
        fail(ErrorCode::Internal, "unexpected forward event");
    }
  }
  fail(ErrorCode::BudgetExceeded, "flow did not return to the section within the event budget");
}

FlowResult backflow_to_section(const FlatModel& m, int sheet, const Ival& x0, const Ival& y0,
                               int64_t max_events) {
  Stepper st(m, sheet, x0, y0, false);
  while (st.events < max_events) {
    ++st.events;
    std::vector<Cand> cands;
    if (certainly_greater(st.y, m.hy0)) cands.push_back({EvType::Section, st.y - m.hy0});
    cands.push_back({EvType::BottomWrap, st.y});
    cands.push_back({EvType::LeftWrap, st.x / m.u});
    if (certainly_greater(st.y, m.hy1)) {
      const Ival dy = st.y - m.hy1;
      const Ival xat = st.x - dy * m.u;
      const Order lo = compare(Ival(m.hx0), xat), hi = compare(xat, Ival(m.hx1));
      if (lo == Order::Less && hi == Order::Less) cands.push_back({EvType::HoleTopGlue, dy});
      else if (lo == Order::Ambiguous || hi == Order::Ambiguous) {
        bool could_win = true;
        for (const Cand& c : cands)
          if (certainly_less(c.dy, dy)) { could_win = false; break; }
        if (could_win) fail(ErrorCode::SingularHit, "backward orbit grazes a hole-top corner");
      }
    }
    if (certainly_greater(st.x, m.hx1)) {
      const Ival dy = (st.x - m.hx1) / m.u;
      const Ival yat = st.y - dy;
      const Order lo = compare(Ival(m.hy0), yat), hi = compare(yat, Ival(m.hy1));
      if (lo == Order::Less && hi == Order::Less) cands.push_back({EvType::HoleRightGlue, dy});
      else if (lo == Order::Ambiguous || hi == Order::Ambiguous) {
        bool could_win = true;
        for (const Cand& c : cands)
          if (certainly_less(c.dy, dy)) { could_win = false; break; }
        if (could_win) fail(ErrorCode::SingularHit, "backward orbit grazes a hole-right corner");
      }
    }
    const auto [best, tied] = pick_min(cands);
    Cand ev = cands[best];
    bool also_left_wrap = false;
    if (tied >= 0) {
      const EvType other = cands[tied].type;
      if (wrap_pair(ev.type, other, EvType::BottomWrap, EvType::LeftWrap) ||
          wrap_pair(ev.type, other, EvType::Section, EvType::LeftWrap)) {
        also_left_wrap = true;
        if (ev.type == EvType::LeftWrap) ev = cands[tied];
        ev.dy = Ival::hull(ev.dy, cands[tied].dy);
      } else {
        fail(ErrorCode::SingularHit, "two backward events coincide within enclosures (corner hit)");
      }
    }
    Ival x2 = st.x - ev.dy * m.u;
    const Ival y2 = st.y - ev.dy;
    st.dy_total += ev.dy;
    if (also_left_wrap) x2 = x2 + 1.0;
    switch (ev.type) {
      case EvType::Section: {
        const Order lo = compare(Ival(m.hx0), x2), hi = compare(x2, Ival(m.hx1));
        if (lo == Order::Less && hi == Order::Less)
          fail(ErrorCode::Internal, "backward orbit descended inside the hole");
        if (lo == Order::Ambiguous || hi == Order::Ambiguous)
          fail(ErrorCode::SingularHit, "backward orbit lands on a hole corner");
        FlowResult out;
        out.sheet = st.sheet;
        out.x = x2;
        out.dy = st.dy_total;
        out.events = st.events;
        return out;
      }
      case EvType::BottomWrap:
        st.x = x2;
        st.y = Ival(1.0);
        break;
      case EvType::LeftWrap:
        st.x = Ival(1.0);
        st.y = y2;
        break;
      case EvType::HoleTopGlue:
        st.x = x2;
        st.y = m.hy0;
        if (m.nsheets == 4) st.sheet ^= 2;
        break;
      case EvType::HoleRightGlue:
        st.x = m.hx0;
        st.y = y2;
        if (m.nsheets == 4) st.sheet ^= 1;
        break;
      default:
        fail(ErrorCode::Internal, "unexpected backward event");
    }
  }
  fail(ErrorCode::BudgetExceeded, "backward flow did not reach the section within the event budget");
}

namespace {

// Crossings along one axis-parallel connector segment on a fixed sheet.
void axis_cross(const FlatModel& m, int sheet, const Ival& x1, const Ival& y1, const Ival& x2,
                const Ival& y2, GenCount& out) {
  const int sx = sheet & 1, sy = sheet >> 1;
  auto between = [&](const Ival& c, const Ival& a, const Ival& b) {
    const Ival lo = a.mid() < b.mid() ? a : b;
    const Ival hi = a.mid() < b.mid() ? b : a;
    const Order u = compare(lo, c), v = compare(c, hi);
    if (u == Order::Less && v == Order::Less) return true;
    if (u == Order::Greater || v == Order::Greater) return false;
    if (lo.mid() == hi.mid()) return false;
    fail(ErrorCode::SingularHit, "connector grazes a marked curve");
  };
  if (x1.mid() != x2.mid()) {  // horizontal
    const int dx = x2.mid() > x1.mid() ? 1 : -1;
    // <v-up, rightward> = -1
    if (between(m.xv, x1, x2)) out[V00 + sheet] += -dx;
    if (between(m.xcv, x1, x2)) {
      // c_v exists at this level only outside the hole band
      if (certainly_less(y1, m.hy0) || certainly_greater(y1, m.hy1)) out[CV0 + sx] += -dx;
    }
  } else {  // vertical
    const int dy = y2.mid() > y1.mid() ? 1 : -1;
    if (between(m.yh, y1, y2)) out[H00 + sheet] += dy;
    if (between(m.ych, y1, y2)) {
      if (certainly_less(x1, m.hx0) || certainly_greater(x1, m.hx1)) out[CH0 + sy] += dy;
    }
  }
}

// Connector across the hole in the x direction: anchor of `sheet` (with
// sx = 1) to the anchor of sheet ^ 1. Crossing counts only.
GenCount conn_x(const FlatModel& m, int sheet) {
  GenCount out{};
  const int s2 = (m.nsheets == 4) ? (sheet ^ 1) : sheet;
  const Ival xq = half(m.hx1 + m.xv);
  const Ival ym = m.hy0 + (m.hy1 - m.hy0) * 0.25;
  const Ival xq2 = half(m.hx0);
  axis_cross(m, sheet, m.hx1, m.hy0, xq, m.hy0, out);
  axis_cross(m, sheet, xq, m.hy0, xq, ym, out);
  axis_cross(m, sheet, xq, ym, m.hx1, ym, out);  // into the hole-right edge
  axis_cross(m, s2, m.hx0, ym, xq2, ym, out);
  axis_cross(m, s2, xq2, ym, xq2, m.hy0, out);
  axis_cross(m, s2, xq2, m.hy0, Ival(0.0), m.hy0, out);
  axis_cross(m, s2, Ival(1.0), m.hy0, m.hx1, m.hy0, out);
  return out;
}

// Connector across the hole in the y direction: anchor of `sheet` (sy = 1)
// to the anchor of sheet ^ 2.
GenCount conn_y(const FlatModel& m, int sheet) {
  GenCount out{};
  const int s2 = (m.nsheets == 4) ? (sheet ^ 2) : sheet;
  const Ival yd = half(m.hy0);
  const Ival xm = m.hx0 + (m.hx1 - m.hx0) * 0.25;
  axis_cross(m, sheet, m.hx1, m.hy0, m.hx1, yd, out);
  axis_cross(m, sheet, m.hx1, yd, xm, yd, out);
  axis_cross(m, sheet, xm, yd, xm, m.hy0, out);  // into the hole-bottom edge
  axis_cross(m, s2, xm, m.hy1, xm, Ival(1.0), out);
  axis_cross(m, s2, xm, Ival(0.0), xm, yd, out);
  axis_cross(m, s2, xm, yd, m.hx1, yd, out);
  axis_cross(m, s2, m.hx1, yd, m.hx1, m.hy0, out);
  return out;
}

}  // namespace

GenCount connector_crossings(const FlatModel& m, int sheet) {
  GenCount out{};
  if (m.nsheets != 4 || sheet == 0) return out;
  int cur = sheet;
  if (cur & 1) {
    const GenCount cx = conn_x(m, cur);
    for (int g = 0; g < kNumGens; ++g) out[g] += cx[g];
    cur ^= 1;
  }
  if (cur & 2) {
    const GenCount cy = conn_y(m, cur);
    for (int g = 0; g < kNumGens; ++g) out[g] += cy[g];
    cur ^= 2;
  }
  return out;
}

GenCount walk_closure(const FlatModel& m, int sheet, const Ival& x) {
  GenCount out{};
  if (m.nsheets != 4) return out;
  // along the component to its anchor (leftward): crosses the sheet's
  // v-curve iff the position exceeds the curve's section position
  const Ival pos = section_pos(m, x);
  const Order o = compare(pos, m.pos_v());
  if (o == Order::Ambiguous) fail(ErrorCode::SingularHit, "section point sits on the v-curve");
  if (o == Order::Greater) out[V00 + sheet] += 1;  // <v-up, leftward> = +1
  const GenCount conn = connector_crossings(m, sheet);
  for (int g = 0; g < kNumGens; ++g) out[g] += conn[g];
  return out;
}

SectionData build_section(const FlatModel& m, int64_t max_events) {
  const int ns = m.nsheets;
  // 1. discontinuities: backward separatrices from the hole corners carrying
  //    an incoming ray (BL, BR, TL for an up-right flow), plus the component
  //    junctions of the concatenated section.
  struct Break {
    Ival c;
  };
  std::vector<Ival> breaks;
  for (int sheet = 0; sheet < ns; ++sheet) {
    const std::array<std::pair<Ival, Ival>, 3> corners = {
        std::make_pair(m.hx0, m.hy0), std::make_pair(m.hx1, m.hy0), std::make_pair(m.hx0, m.hy1)};
    for (const auto& [cx, cy] : corners) {
      const FlowResult fr = backflow_to_section(m, sheet, cx, cy, max_events);
      breaks.push_back(section_concat(m, fr.sheet, fr.x));
    }
  }
  for (int k = 1; k < ns; ++k) breaks.push_back(Ival(static_cast<double>(k)) * m.comp_len());
  std::sort(breaks.begin(), breaks.end(), [](const Ival& a, const Ival& b) { return a.mid() < b.mid(); });
  for (size_t i = 0; i + 1 < breaks.size(); ++i)
    if (!certainly_less(breaks[i], breaks[i + 1]))
      fail(ErrorCode::SingularHit, "section discontinuities are not certifiably distinct");
  const Ival total = m.total_len();
  if (!breaks.empty()) {
    if (!certainly_greater(breaks.front(), Ival(0.0)) || !certainly_less(breaks.back(), total))
      fail(ErrorCode::SingularHit, "separatrix lands on a section endpoint");
  }

  const int n = static_cast<int>(breaks.size()) + 1;
  std::vector<Ival> lefts;
  lefts.push_back(Ival(0.0));
  for (const Ival& b : breaks) lefts.push_back(b);
  lefts.push_back(total);

  // 2. per-letter forward traces from interval midpoints
  SectionData sd;
  sd.model = m;
  std::vector<Ival> lens(n);
  std::vector<Ival> image_left(n);
  sd.cross.assign(n, GenCount{});
  sd.comp.assign(n, 0);
  sd.flight_dy.assign(n, Ival(0.0));
  for (int i = 0; i < n; ++i) {
    lens[i] = lefts[i + 1] - lefts[i];
    const Ival mid = half(lefts[i] + lefts[i + 1]);
    const SectionPoint sp = section_from_concat(m, mid);
    sd.comp[i] = sp.sheet;
    const FlowResult fr = flow_to_section(m, sp.sheet, sp.x, max_events);
    const Ival img = section_concat(m, fr.sheet, fr.x);
    image_left[i] = lefts[i] + (img - mid);  // translation applied to the left end
    sd.flight_dy[i] = fr.dy;
    if (ns == 4) {
      GenCount total_cross = fr.cross;
      const GenCount w_end = walk_closure(m, fr.sheet, fr.x);
      const GenCount w_start = walk_closure(m, sp.sheet, sp.x);
      for (int g = 0; g < kNumGens; ++g) total_cross[g] += w_end[g] - w_start[g];
      sd.cross[i] = total_cross;
    }
  }

  // 3. assemble the IET; bottom order from the image layout
  std::vector<int> topv(n), botv(n);
  std::iota(topv.begin(), topv.end(), 0);
  std::vector<std::pair<double, int>> img_sorted;
  for (int i = 0; i < n; ++i) img_sorted.push_back({image_left[i].mid(), i});
  std::sort(img_sorted.begin(), img_sorted.end());
  for (int i = 0; i < n; ++i) botv[i] = img_sorted[i].second;
  sd.iet = Iet::make_induced(Perm{topv, botv}, lens);

  // bijectivity: images tile [0, total)
  Ival cur(0.0);
  for (int i = 0; i < n; ++i) {
    const int a = img_sorted[i].second;
    if (!image_left[a].intersects(cur))
      fail(ErrorCode::Internal, "section images do not tile the interval");
    cur += lens[a];
  }
  if (!cur.contains(total.mid())) fail(ErrorCode::Internal, "section images do not close up");

  // 4. Klein involutions on the alphabet (X model): component k maps to
  //    component k^1 / k^2 preserving the within-component slot.
  if (ns == 4) {
    std::vector<int> comp_start(ns + 1, 0);
    for (int i = 0; i < n; ++i) comp_start[sd.comp[i] + 1]++;
    for (int k = 0; k < ns; ++k) comp_start[k + 1] += comp_start[k];
    const int per = n / ns;
    for (int k = 0; k < ns; ++k)
      if (comp_start[k + 1] - comp_start[k] != per)
        fail(ErrorCode::Internal, "components have unequal letter counts; Klein action undefined");
    sd.invol_h.resize(n);
    sd.invol_v.resize(n);
    for (int i = 0; i < n; ++i) {
      const int k = sd.comp[i], slot = i - comp_start[k];
      sd.invol_h[i] = comp_start[k ^ 1] + slot;
      sd.invol_v[i] = comp_start[k ^ 2] + slot;
    }
    for (int i = 0; i < n; ++i) {
      if (sd.invol_h[sd.invol_h[i]] != i || sd.invol_v[sd.invol_v[i]] != i ||
          sd.invol_h[i] == i || sd.invol_v[i] == i)
        fail(ErrorCode::Internal, "alphabet involutions are not fixed-point-free involutions");
      if (!lens[i].intersects(lens[sd.invol_h[i]]) || !lens[i].intersects(lens[sd.invol_v[i]]))
        fail(ErrorCode::Internal, "Klein-conjugate letters have different lengths");
    }

    // 5. the tracer must kill both homology relations exactly
    for (int i = 0; i < n; ++i) {
      const auto& c = sd.cross[i];
      const int64_t r1 = c[CH0] - c[CH1] - c[H00] - c[H10] + c[H01] + c[H11];
      const int64_t r2 = c[CV0] - c[CV1] - c[V00] + c[V10] - c[V01] + c[V11];
      if (r1 != 0 || r2 != 0)
        fail(ErrorCode::Internal, "section loops do not annihilate the homology relations");
    }
  }
  return sd;
}

std::vector<Ival> phi_of(const SectionData& sd, const HomologyClass& c) {
  const std::array<Rat, kNumGens> raw = c.to_raw();
  std::vector<Ival> out(sd.size(), Ival(0.0));
  for (int i = 0; i < sd.size(); ++i)
    for (int g = 0; g < kNumGens; ++g)
      if (!raw[g].is_zero() && sd.cross[i][g] != 0)
        out[i] += Ival(raw[g].to_double()) * Ival(static_cast<double>(sd.cross[i][g]));
  return out;
}

std::vector<int64_t> phi_of_int(const SectionData& sd, const HomologyClass& c) {
  if (!c.is_integer()) fail(ErrorCode::InvalidParams, "phi_of_int needs an integer class");
  const std::array<Rat, kNumGens> raw = c.to_raw();
  std::vector<int64_t> out(sd.size(), 0);
  for (int i = 0; i < sd.size(); ++i)
    for (int g = 0; g < kNumGens; ++g) out[i] += raw[g].num * sd.cross[i][g];
  return out;
}

std::string SectionData::to_text() const {
  std::ostringstream os;
  char buf[160];
  std::snprintf(buf, sizeof buf, "model %d %.17g %.17g %.17g %.17g %.17g %.17g\n", model.nsheets,
                model.a.lo, model.a.hi, model.b.lo, model.b.hi, model.u.lo, model.u.hi);
  os << buf;
  os << "iet\n" << iet.to_text();
  for (int i = 0; i < size(); ++i) {
    os << "cross";
    for (int g = 0; g < kNumGens; ++g) os << " " << cross[i][g];
    os << "\n";
  }
  os << "comp";
  for (int i = 0; i < size(); ++i) os << " " << comp[i];
  os << "\n";
  os << "dy";
  for (int i = 0; i < size(); ++i) {
    std::snprintf(buf, sizeof buf, " %.17g %.17g", flight_dy[i].lo, flight_dy[i].hi);
    os << buf;
  }
  os << "\n";
  if (!invol_h.empty()) {
    os << "invh";
    for (int v : invol_h) os << " " << v;
    os << "\ninvv";
    for (int v : invol_v) os << " " << v;
    os << "\n";
  }
  return os.str();
}

SectionData SectionData::from_text(const std::string& text) {
  std::istringstream is(text);
  std::string tok;
  SectionData sd;
  if (!(is >> tok) || tok != "model") fail(ErrorCode::ParseError, "section record: missing model");
  int ns;
  double alo, ahi, blo, bhi, ulo, uhi;
  is >> ns >> alo >> ahi >> blo >> bhi >> ulo >> uhi;
  sd.model = (ns == 1) ? make_y_model(Ival(alo, ahi), Ival(blo, bhi), Ival(ulo, uhi))
                       : make_x_model(Ival(alo, ahi), Ival(blo, bhi), Ival(ulo, uhi));
  if (!(is >> tok) || tok != "iet") fail(ErrorCode::ParseError, "section record: missing iet");
  std::string line, iettext;
  std::getline(is, line);
  for (int i = 0; i < 3; ++i) {
    if (!std::getline(is, line)) fail(ErrorCode::ParseError, "section record: truncated IET");
    iettext += line + "\n";
  }
  sd.iet = Iet::from_text(iettext);
  const int n = sd.iet.size();
  sd.cross.assign(n, GenCount{});
  for (int i = 0; i < n; ++i) {
    if (!(is >> tok) || tok != "cross") fail(ErrorCode::ParseError, "section record: missing cross row");
    for (int g = 0; g < kNumGens; ++g) is >> sd.cross[i][g];
  }
  if (!(is >> tok) || tok != "comp") fail(ErrorCode::ParseError, "section record: missing comp");
  sd.comp.assign(n, 0);
  for (int i = 0; i < n; ++i) is >> sd.comp[i];
  if (!(is >> tok) || tok != "dy") fail(ErrorCode::ParseError, "section record: missing dy");
  sd.flight_dy.assign(n, Ival(0.0));
  for (int i = 0; i < n; ++i) {
    double lo, hi;
    is >> lo >> hi;
    sd.flight_dy[i] = Ival(lo, hi);
  }
  if (is >> tok && tok == "invh") {
    sd.invol_h.assign(n, 0);
    for (int i = 0; i < n; ++i) is >> sd.invol_h[i];
    if (!(is >> tok) || tok != "invv") fail(ErrorCode::ParseError, "section record: missing invv");
    sd.invol_v.assign(n, 0);
    for (int i = 0; i < n; ++i) is >> sd.invol_v[i];
  }
  return sd;
}

}  // namespace windtree
