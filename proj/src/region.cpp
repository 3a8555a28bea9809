#include "tcent/region.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

namespace tcent {

Region Region::from_qubits(std::size_t n, std::span<const uint32_t> qubits,
                           std::string provenance) {
  Region r(n, std::move(provenance));
  for (uint32_t q : qubits) r.insert(q);
  return r;
}

Region Region::full(std::size_t n, std::string provenance) {
  Region r(n, std::move(provenance));
  for (std::size_t w = 0; w < r.mask_.size(); ++w) r.mask_[w] = ~uint64_t{0};
  std::size_t tail = n % 64;
  if (tail) r.mask_.back() &= (uint64_t{1} << tail) - 1;
  return r;
}

std::size_t Region::size() const {
  std::size_t s = 0;
  for (uint64_t w : mask_) s += static_cast<std::size_t>(__builtin_popcountll(w));
  return s;
}

void Region::insert(uint32_t q) {
  if (q >= n_) throw std::out_of_range("Region::insert: qubit index out of range");
  mask_[q / 64] |= uint64_t{1} << (q % 64);
}

void Region::erase(uint32_t q) {
  if (q >= n_) throw std::out_of_range("Region::erase: qubit index out of range");
  mask_[q / 64] &= ~(uint64_t{1} << (q % 64));
}

std::vector<uint32_t> Region::qubits() const {
  std::vector<uint32_t> qs;
  for (std::size_t w = 0; w < mask_.size(); ++w) {
    uint64_t bits = mask_[w];
    while (bits) {
      unsigned b = static_cast<unsigned>(__builtin_ctzll(bits));
      qs.push_back(static_cast<uint32_t>(w * 64 + b));
      bits &= bits - 1;
    }
  }
  return qs;
}

Region Region::complement() const {
  Region r = Region::full(n_, fmt::format("complement({})", provenance_));
  for (std::size_t w = 0; w < mask_.size(); ++w) r.mask_[w] &= ~mask_[w];
  return r;
}

bool Region::disjoint_with(const Region& o) const {
  check_compatible(o);
  for (std::size_t w = 0; w < mask_.size(); ++w) {
    if (mask_[w] & o.mask_[w]) return false;
  }
  return true;
}

void Region::check_compatible(const Region& o) const {
  if (n_ != o.n_) throw std::invalid_argument("regions belong to different lattices");
}

Region operator|(const Region& a, const Region& b) {
  a.check_compatible(b);
  Region r = a;
  for (std::size_t w = 0; w < r.mask_.size(); ++w) r.mask_[w] |= b.mask_[w];
  r.provenance_ = fmt::format("({}|{})", a.provenance_, b.provenance_);
  return r;
}

Region operator&(const Region& a, const Region& b) {
  a.check_compatible(b);
  Region r = a;
  for (std::size_t w = 0; w < r.mask_.size(); ++w) r.mask_[w] &= b.mask_[w];
  r.provenance_ = fmt::format("({}&{})", a.provenance_, b.provenance_);
  return r;
}

Region operator-(const Region& a, const Region& b) {
  a.check_compatible(b);
  Region r = a;
  for (std::size_t w = 0; w < r.mask_.size(); ++w) r.mask_[w] &= ~b.mask_[w];
  r.provenance_ = fmt::format("({}-{})", a.provenance_, b.provenance_);
  return r;
}

namespace {

int64_t doubled(double x) {
  double d = 2.0 * x;
  int64_t r = std::llround(d);
  if (std::abs(d - static_cast<double>(r)) > 1e-9) {
    throw std::invalid_argument("box coordinates must be multiples of 0.5");
  }
  return r;
}

// Closed-interval membership in doubled coordinates, modulo the doubled
// period on periodic axes.
bool axis_member(int64_t m, int64_t lo, int64_t hi, std::optional<int64_t> period) {
  int64_t span = hi - lo;
  if (span < 0) return false;
  if (!period) return m >= lo && m <= hi;
  if (span >= *period) return true;
  int64_t r = (m - lo) % *period;
  if (r < 0) r += *period;
  return r <= span;
}

}  // namespace

Region box_region(const CodeLattice& lattice, const Box& box) {
  const auto& spec = lattice.spec();
  std::array<int64_t, 3> lo2{}, hi2{};
  for (int a = 0; a < spec.dimension; ++a) {
    lo2[a] = doubled(box.lo[a]);
    hi2[a] = doubled(box.hi[a]);
  }
  Region r(lattice.n_qubits(),
           fmt::format("box[{},{}]x[{},{}]x[{},{}]", box.lo[0], box.hi[0], box.lo[1],
                       box.hi[1], box.lo[2], box.hi[2]));
  for (uint32_t e = 0; e < lattice.n_qubits(); ++e) {
    EdgeCoord ec = lattice.edge_coord(e);
    bool in = true;
    for (int a = 0; a < spec.dimension && in; ++a) {
      int64_t m = 2 * ec.v[a] + (a == ec.axis ? 1 : 0);
      std::optional<int64_t> period;
      if (spec.periodic(a)) period = 2 * static_cast<int64_t>(spec.extents[a]);
      in = axis_member(m, lo2[a], hi2[a], period);
    }
    if (in) r.insert(e);
  }
  return r;
}

Region annulus_region(const CodeLattice& lattice, const Box& outer, const Box& inner) {
  return box_region(lattice, outer) - box_region(lattice, inner);
}

AreaReport area_report(const CodeLattice& lattice, const Region& region) {
  AreaReport rep;
  if (region.n_qubits() != lattice.n_qubits()) {
    throw std::invalid_argument("region does not belong to this lattice");
  }
  Region comp = region.complement();
  auto cut = [&](const PauliWord& op) {
    return op.intersects(region.mask()) && op.intersects(comp.mask());
  };

  const auto& stars = lattice.stars();
  std::vector<char> star_cut(stars.size(), 0);
  for (std::size_t s = 0; s < stars.size(); ++s) star_cut[s] = cut(stars[s].op);
  rep.area = std::accumulate(star_cut.begin(), star_cut.end(), int64_t{0});
  if (rep.area == 0) return rep;

  // Union-find over cut stars, joined through shared cut plaquettes.
  std::vector<uint32_t> parent(stars.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto unite = [&](uint32_t a, uint32_t b) { parent[find(a)] = find(b); };

  for (const auto& p : lattice.plaquettes()) {
    if (!cut(p.op)) continue;
    int first = -1;
    for (uint32_t e : p.op.support()) {
      for (uint32_t s : lattice.stars_on_edge(e)) {
        if (!star_cut[s]) continue;
        if (first < 0) {
          first = static_cast<int>(s);
        } else {
          unite(static_cast<uint32_t>(first), s);
        }
      }
    }
  }

  // A component is anchored on a rough face when one of its cut stars holds
  // a rough dangling edge inside the region.
  std::vector<uint32_t> roots;
  std::vector<char> anchored(stars.size(), 0);
  for (std::size_t s = 0; s < stars.size(); ++s) {
    if (!star_cut[s]) continue;
    uint32_t r = find(static_cast<uint32_t>(s));
    roots.push_back(r);
    for (uint32_t e : stars[s].op.support()) {
      if (lattice.is_rough_dangling(e) && region.contains(e)) {
        anchored[r] = 1;
        break;
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  rep.components_total = static_cast<int64_t>(roots.size());
  for (uint32_t r : roots) {
    if (!anchored[r]) ++rep.components_rough_free;
  }
  return rep;
}

namespace {

// Canonical frame against one physical face: w is the distance from the
// face, u and v the transverse axes in ascending order. Boxes given in
// (u, v, w) map to lattice boxes, reflecting w for high faces.
struct FaceFrame {
  const CodeLattice& lat;
  int axis;
  bool high;
  int ua, va;

  FaceFrame(const CodeLattice& lattice, Face face)
      : lat(lattice), axis(face_axis(face)), high(face_is_high(face)) {
    const auto& spec = lattice.spec();
    if (spec.dimension != 3) {
      throw std::invalid_argument("face partitions require a 3D lattice");
    }
    if (spec.periodic(axis)) {
      throw std::invalid_argument("designated face must be a physical boundary");
    }
    std::array<int, 2> tr{};
    int k = 0;
    for (int a = 0; a < 3; ++a) {
      if (a != axis) tr[k++] = a;
    }
    ua = tr[0];
    va = tr[1];
  }

  Box to_lattice(double u0, double u1, double v0, double v1, double w0,
                 double w1) const {
    Box b;
    b.lo[ua] = u0;
    b.hi[ua] = u1;
    b.lo[va] = v0;
    b.hi[va] = v1;
    int L = lat.spec().extents[axis];
    if (high) {
      b.lo[axis] = L - w1;
      b.hi[axis] = L - w0;
    } else {
      b.lo[axis] = w0;
      b.hi[axis] = w1;
    }
    return b;
  }

  // Regions must not run into the opposite face, and must keep two cells of
  // clearance around a periodic seam (closer and the cut surfaces of the
  // partition touch themselves through the wrap).
  void check_fits(double u0, double u1, double v0, double v1, double w1) const {
    const auto& spec = lat.spec();
    auto check_axis = [&](int a, double lo, double hi) {
      double limit = spec.extents[a];
      if (spec.periodic(a)) {
        if (hi - lo > limit - 2) {
          throw std::invalid_argument("partition params too large for lattice");
        }
      } else if (lo < 0 || hi > limit) {
        throw std::invalid_argument("partition params too large for lattice");
      }
    };
    check_axis(ua, u0, u1);
    check_axis(va, v0, v1);
    check_axis(axis, 0, w1);
  }
};

void check_partition(const PartitionABCD& p) {
  if (p.b.empty() || p.c.empty() || p.d.empty()) {
    throw std::invalid_argument("partition region degenerated to empty");
  }
  if (!p.b.disjoint_with(p.c) || !p.b.disjoint_with(p.d) || !p.c.disjoint_with(p.d)) {
    throw std::invalid_argument("partition regions overlap");
  }
}

}  // namespace

PartitionABCD partition_point(const CodeLattice& lattice,
                              const PointPartitionParams& prm) {
  if (prm.slab < 1 || prm.bridge < 1 || prm.width < 1 || prm.height < 1 ||
      prm.wrap < 1) {
    throw std::invalid_argument("partition_point: all sizes must be >= 1");
  }
  FaceFrame f(lattice, prm.face);
  const double u0 = prm.origin[0];
  const double v0 = prm.origin[1];
  const double u1 = u0 + prm.slab;                // D1 | C seam
  const double u2 = u1 + prm.bridge;              // C | D2 seam
  const double u3 = u2 + prm.slab;                // D2 outer end
  f.check_fits(u0, u3, v0 - prm.wrap, v0 + prm.width + prm.wrap,
               prm.height + prm.wrap);

  Region d1 = box_region(lattice, f.to_lattice(u0, u1, v0, v0 + prm.width, 0, prm.height));
  Region d2 = box_region(lattice, f.to_lattice(u2, u3, v0, v0 + prm.width, 0, prm.height));
  Region cbox =
      box_region(lattice, f.to_lattice(u1, u2, v0, v0 + prm.width, 0, prm.height));
  Region barch =
      box_region(lattice, f.to_lattice(u1, u2, v0 - prm.wrap, v0 + prm.width + prm.wrap,
                                       0, prm.height + prm.wrap));

  PartitionABCD p;
  p.d = d1 | d2;
  p.d.set_provenance("point.D");
  p.c = cbox - p.d;
  p.c.set_provenance("point.C");
  p.b = barch - cbox - p.d;
  p.b.set_provenance("point.B");
  p.a = (p.b | p.c | p.d).complement();
  p.a.set_provenance("point.A");
  check_partition(p);

  // Excitation sites: one boundary-layer edge in A just outside each D slab.
  Region pbox = box_region(lattice, f.to_lattice(u0 - 1, u0, v0, v0 + prm.width, 0, 1));
  Region qbox = box_region(lattice, f.to_lattice(u3, u3 + 1, v0, v0 + prm.width, 0, 1));
  auto site = [&](const Region& box) -> std::vector<uint32_t> {
    Region cand = box & p.a;
    auto qs = cand.qubits();
    if (qs.empty()) return {};
    return {qs.front()};
  };
  p.p_sites = site(pbox);
  p.q_sites = site(qbox);
  return p;
}

PartitionABCD partition_line(const CodeLattice& lattice, const LinePartitionParams& prm) {
  if (prm.core < 1 || prm.ring < 1 || prm.ring_height < 1 || prm.column < 1 ||
      prm.hood < 1) {
    throw std::invalid_argument("partition_line: all sizes must be >= 1");
  }
  if (prm.hood > prm.ring) {
    throw std::invalid_argument("partition_line: hood must not overhang the ring");
  }
  FaceFrame f(lattice, prm.face);
  const double a0 = prm.origin[0];
  const double b0 = prm.origin[1];
  const double a1 = a0 + prm.core;
  const double b1 = b0 + prm.core;
  const double wr = prm.ring_height;            // D ring top
  const double wc = wr + prm.column;            // C column top
  f.check_fits(a0 - prm.ring, a1 + prm.ring, b0 - prm.ring, b1 + prm.ring,
               wc + prm.hood);

  Region cbox = box_region(lattice, f.to_lattice(a0, a1, b0, b1, 0, wc));
  Region dbox = box_region(lattice, f.to_lattice(a0 - prm.ring, a1 + prm.ring,
                                                 b0 - prm.ring, b1 + prm.ring, 0, wr));
  Region bbox = box_region(lattice, f.to_lattice(a0 - prm.hood, a1 + prm.hood,
                                                 b0 - prm.hood, b1 + prm.hood, wr,
                                                 wc + prm.hood));

  PartitionABCD p;
  p.c = cbox;
  p.c.set_provenance("line.C");
  p.d = dbox - cbox;
  p.d.set_provenance("line.D");
  p.b = bbox - cbox - p.d;
  p.b.set_provenance("line.B");
  p.a = (p.b | p.c | p.d).complement();
  p.a.set_provenance("line.A");
  check_partition(p);

  // The would-be loop excitation: boundary-layer ring in A around D's foot.
  Region loop_band =
      box_region(lattice, f.to_lattice(a0 - prm.ring - 1, a1 + prm.ring + 1,
                                       b0 - prm.ring - 1, b1 + prm.ring + 1, 0, 1)) -
      box_region(lattice, f.to_lattice(a0 - prm.ring, a1 + prm.ring, b0 - prm.ring,
                                       b1 + prm.ring, 0, 1));
  p.p_sites = (loop_band & p.a).qubits();
  return p;
}

PartitionABCD partition_2d(const CodeLattice& lattice, const TwoDPartitionParams& prm) {
  const auto& spec = lattice.spec();
  if (spec.dimension != 2) {
    throw std::invalid_argument("partition_2d requires a 2D lattice");
  }
  if (!spec.periodic(0) || !spec.periodic(1)) {
    throw std::invalid_argument("partition_2d requires a 2D torus");
  }
  const int L = spec.extents[0];
  if (spec.extents[1] != L) {
    throw std::invalid_argument("partition_2d requires a square torus");
  }
  const int o = prm.outer;
  const int h = prm.hole;
  if (o < 0 || h - o < 1) {
    throw std::invalid_argument("partition_2d: band has no room (regions would overlap)");
  }
  if (L - 2 * h < 1) {
    throw std::invalid_argument("partition_2d: hole has no room");
  }

  auto box2 = [&](double x0, double x1, double y0, double y1) {
    Box b;
    b.lo = {x0, y0, 0};
    b.hi = {x1, y1, 0};
    return box_region(lattice, b);
  };

  Region outer = box2(o, L - o, o, L - o);
  Region hole = box2(h, L - h, h, L - h);
  Region ring = outer - hole;

  PartitionABCD p;
  Region left = box2(o, h, o, L - o) - hole;
  Region right = box2(L - h, L - o, o, L - o) - hole;
  p.a = left;
  p.a.set_provenance("2d.A");
  p.c = right;
  p.c.set_provenance("2d.C");
  p.b = ring - left - right;
  p.b.set_provenance("2d.B");
  p.d = (p.a | p.b | p.c).complement();
  p.d.set_provenance("2d.D");
  check_partition(p);

  // Two marked sites in A against the hole rim.
  auto pick = [&](double y) -> std::vector<uint32_t> {
    Region band = box2(h - 1, h - 0.5, y, y + 0.5) & p.a;
    auto qs = band.qubits();
    if (qs.empty()) return {};
    return {qs.front()};
  };
  p.p_sites = pick(h + 1);
  p.q_sites = pick(L - h - 1);
  return p;
}

}  // namespace tcent
