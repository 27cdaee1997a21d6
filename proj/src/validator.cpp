#include "fcit/validator.hpp"

#include <algorithm>
#include <cmath>

namespace fcit {

int motion_state_count(double dist, double resolution) {
  if (!(resolution > 0.0)) throw ContractViolation("motion check: resolution must be > 0");
  int segments = std::max(2, static_cast<int>(std::ceil(dist / resolution)));
  // Round up to a power of two: the state grid of any finer resolution is
  // then a superset of this one, so refining a check can only find more
  // collisions, never fewer.
  int pow2 = 1;
  while (pow2 < segments) pow2 <<= 1;
  return pow2 + 1;
}

namespace {

// Flattened point-robot obstacle data. One array per scalar field keeps the
// inner lane loops contiguous and branch-free.
struct PointKernels {
  int wd = 2;
  std::vector<double> scx, scy, scz, sr2;                      // spheres
  std::vector<double> blx, bly, blz, bhx, bhy, bhz;            // boxes
  std::vector<double> cax, cay, caz, cux, cuy, cuz, cinv, cr2; // capsules
};

// Arm-side obstacle data with the link radius folded into the thresholds.
struct ArmKernels {
  std::vector<double> lengths;
  std::array<double, 2> base{0.0, 0.0};
  double link_r = 0.0;
  double self_r2 = 0.0;  // (2*link_r)^2
  std::vector<double> scx, scy, ssum_r2;           // spheres, (r+link_r)^2
  std::vector<std::array<double, 4>> boxes;        // lx, ly, hx, hy
  std::vector<double> kax, kay, kbx, kby, ksum_r2; // capsules
};

PointKernels build_point_kernels(const PointRobot& robot, const Environment& env) {
  PointKernels k;
  k.wd = robot.dim;
  for (const Obstacle& obs : env.obstacles) {
    if (const auto* s = std::get_if<Sphere>(&obs)) {
      k.scx.push_back(s->center[0]);
      k.scy.push_back(s->center[1]);
      k.scz.push_back(k.wd == 3 ? s->center[2] : 0.0);
      k.sr2.push_back(s->radius * s->radius);
    } else if (const auto* b = std::get_if<AxisAlignedBox>(&obs)) {
      k.blx.push_back(b->lo[0]);
      k.bly.push_back(b->lo[1]);
      k.blz.push_back(k.wd == 3 ? b->lo[2] : 0.0);
      k.bhx.push_back(b->hi[0]);
      k.bhy.push_back(b->hi[1]);
      k.bhz.push_back(k.wd == 3 ? b->hi[2] : 0.0);
    } else if (const auto* c = std::get_if<Capsule>(&obs)) {
      const double ux = c->b[0] - c->a[0];
      const double uy = c->b[1] - c->a[1];
      const double uz = k.wd == 3 ? c->b[2] - c->a[2] : 0.0;
      const double len2 = k.wd == 3 ? dist2_3d(ux, uy, uz) : dist2_2d(ux, uy);
      k.cax.push_back(c->a[0]);
      k.cay.push_back(c->a[1]);
      k.caz.push_back(k.wd == 3 ? c->a[2] : 0.0);
      k.cux.push_back(ux);
      k.cuy.push_back(uy);
      k.cuz.push_back(uz);
      k.cinv.push_back(len2 > 0.0 ? 1.0 / len2 : 0.0);
      k.cr2.push_back(c->radius * c->radius);
    }
  }
  return k;
}

ArmKernels build_arm_kernels(const PlanarArm& arm, const Environment& env) {
  ArmKernels k;
  k.lengths = arm.link_lengths;
  k.base = arm.base;
  k.link_r = arm.link_radius;
  k.self_r2 = (2.0 * arm.link_radius) * (2.0 * arm.link_radius);
  for (const Obstacle& obs : env.obstacles) {
    if (const auto* s = std::get_if<Sphere>(&obs)) {
      k.scx.push_back(s->center[0]);
      k.scy.push_back(s->center[1]);
      const double sum = s->radius + arm.link_radius;
      k.ssum_r2.push_back(sum * sum);
    } else if (const auto* b = std::get_if<AxisAlignedBox>(&obs)) {
      k.boxes.push_back({b->lo[0], b->lo[1], b->hi[0], b->hi[1]});
    } else if (const auto* c = std::get_if<Capsule>(&obs)) {
      k.kax.push_back(c->a[0]);
      k.kay.push_back(c->a[1]);
      k.kbx.push_back(c->b[0]);
      k.kby.push_back(c->b[1]);
      const double sum = c->radius + arm.link_radius;
      k.ksum_r2.push_back(sum * sum);
    }
  }
  return k;
}

constexpr int kMaxArmJoints = 32;

// One arm configuration against everything: obstacles per link, then
// non-adjacent link pairs. Shared by the scalar and block paths.
bool arm_lane_valid(const ArmKernels& k, const double* jx, const double* jy, int n_links) {
  for (int i = 0; i < n_links; ++i) {
    const double ax = jx[i], ay = jy[i];
    const double ux = jx[i + 1] - ax, uy = jy[i + 1] - ay;
    const double len2 = dist2_2d(ux, uy);
    const double inv = len2 > 0.0 ? 1.0 / len2 : 0.0;
    for (std::size_t s = 0; s < k.scx.size(); ++s) {
      if (dist2_point_segment_2d(k.scx[s], k.scy[s], ax, ay, ux, uy, inv) < k.ssum_r2[s]) return false;
    }
    for (const auto& b : k.boxes) {
      if (segment_intersects_box_2d(ax, ay, jx[i + 1], jy[i + 1], b[0], b[1], b[2], b[3], /*strict=*/true)) {
        return false;
      }
      if (k.link_r > 0.0 &&
          dist2_segment_box_2d(ax, ay, jx[i + 1], jy[i + 1], b[0], b[1], b[2], b[3]) < k.link_r * k.link_r) {
        return false;
      }
    }
    for (std::size_t s = 0; s < k.kax.size(); ++s) {
      if (dist2_segment_segment_2d(ax, ay, jx[i + 1], jy[i + 1], k.kax[s], k.kay[s], k.kbx[s], k.kby[s]) <
          k.ksum_r2[s]) {
        return false;
      }
    }
  }
  // Self collision; adjacent pairs share a joint and are skipped.
  for (int i = 0; i + 2 < n_links; ++i) {
    for (int j = i + 2; j < n_links; ++j) {
      if (dist2_segment_segment_2d(jx[i], jy[i], jx[i + 1], jy[i + 1], jx[j], jy[j], jx[j + 1], jy[j + 1]) <
          k.self_r2) {
        return false;
      }
    }
  }
  return true;
}

void arm_lane_fk(const ArmKernels& k, const double* q, int stride, double* jx, double* jy) {
  const int n = static_cast<int>(k.lengths.size());
  jx[0] = k.base[0];
  jy[0] = k.base[1];
  double theta = 0.0;
  for (int i = 0; i < n; ++i) {
    theta += q[static_cast<std::size_t>(i) * stride];
    jx[i + 1] = jx[i] + k.lengths[static_cast<std::size_t>(i)] * std::cos(theta);
    jy[i + 1] = jy[i] + k.lengths[static_cast<std::size_t>(i)] * std::sin(theta);
  }
}

int reverse_bits(int v, int nbits) {
  int r = 0;
  for (int i = 0; i < nbits; ++i) {
    r = (r << 1) | ((v >> i) & 1);
  }
  return r;
}

}  // namespace

struct Validator::Impl {
  RobotModel model;
  Environment env;
  int width;
  int cdim;
  bool is_point;
  PointKernels point;
  ArmKernels arm;
};

Validator::Validator(RobotModel model, Environment env, int block_width)
    : impl_(std::make_unique<Impl>()) {
  validate_model(model);
  env.validate(fcit::workspace_dim(model));
  if (!is_power_of_two(block_width) || block_width > 32) {
    throw ContractViolation("validator: block width must be a power of two <= 32");
  }
  impl_->width = block_width;
  impl_->cdim = fcit::config_dim(model);
  impl_->is_point = std::holds_alternative<PointRobot>(model);
  if (impl_->is_point) {
    impl_->point = build_point_kernels(std::get<PointRobot>(model), env);
  } else {
    const auto& arm = std::get<PlanarArm>(model);
    if (arm.joints() > kMaxArmJoints) throw ContractViolation("validator: too many arm joints");
    impl_->arm = build_arm_kernels(arm, env);
  }
  impl_->model = std::move(model);
  impl_->env = std::move(env);
}

Validator::~Validator() = default;

int Validator::config_dim() const { return impl_->cdim; }
int Validator::block_width() const { return impl_->width; }
const RobotModel& Validator::model() const { return impl_->model; }
const Environment& Validator::environment() const { return impl_->env; }

bool Validator::is_valid(std::span<const double> q) const {
  if (static_cast<int>(q.size()) != impl_->cdim) {
    throw ContractViolation("validator: configuration dimension mismatch");
  }
  if (impl_->is_point) {
    const PointKernels& k = impl_->point;
    const double px = q[0], py = q[1], pz = k.wd == 3 ? q[2] : 0.0;
    for (std::size_t s = 0; s < k.scx.size(); ++s) {
      const double d2 = k.wd == 3 ? dist2_3d(px - k.scx[s], py - k.scy[s], pz - k.scz[s])
                                  : dist2_2d(px - k.scx[s], py - k.scy[s]);
      if (d2 < k.sr2[s]) return false;
    }
    for (std::size_t s = 0; s < k.blx.size(); ++s) {
      const bool inside = px > k.blx[s] && px < k.bhx[s] && py > k.bly[s] && py < k.bhy[s] &&
                          (k.wd != 3 || (pz > k.blz[s] && pz < k.bhz[s]));
      if (inside) return false;
    }
    for (std::size_t s = 0; s < k.cax.size(); ++s) {
      const double d2 = k.wd == 3 ? dist2_point_segment_3d(px, py, pz, k.cax[s], k.cay[s], k.caz[s],
                                                           k.cux[s], k.cuy[s], k.cuz[s], k.cinv[s])
                                  : dist2_point_segment_2d(px, py, k.cax[s], k.cay[s], k.cux[s],
                                                           k.cuy[s], k.cinv[s]);
      if (d2 < k.cr2[s]) return false;
    }
    return true;
  }
  double jx[kMaxArmJoints + 1];
  double jy[kMaxArmJoints + 1];
  arm_lane_fk(impl_->arm, q.data(), 1, jx, jy);
  return arm_lane_valid(impl_->arm, jx, jy, static_cast<int>(impl_->arm.lengths.size()));
}

std::uint32_t Validator::valid_mask(const ValidationBlock& block) const {
  if (block.dim() != impl_->cdim) throw ContractViolation("validator: block dimension mismatch");
  const int w = block.width();
  const int occ = block.occupancy();
  if (occ == 0) return 0;
  std::uint32_t mask = occ >= 32 ? 0xffffffffu : ((1u << occ) - 1u);

  if (!impl_->is_point) {
    // Lane loop over the shared arm routine; the arm path gains nothing from
    // lane parallelism but keeps block/scalar agreement exact.
    std::vector<double> lane(static_cast<std::size_t>(impl_->cdim));
    for (int l = 0; l < occ; ++l) {
      block.copy_lane(l, lane);
      if (!is_valid(lane)) mask &= ~(1u << l);
    }
    return mask;
  }

  const PointKernels& k = impl_->point;
  const double* X = block.lane_values(0);
  const double* Y = block.lane_values(1);
  const double* Z = k.wd == 3 ? block.lane_values(2) : nullptr;

  for (std::size_t s = 0; s < k.scx.size() && mask != 0; ++s) {
    const double cx = k.scx[s], cy = k.scy[s], cz = k.scz[s], r2 = k.sr2[s];
    std::uint32_t hit = 0;
    for (int l = 0; l < w; ++l) {
      const double d2 = k.wd == 3 ? dist2_3d(X[l] - cx, Y[l] - cy, Z[l] - cz)
                                  : dist2_2d(X[l] - cx, Y[l] - cy);
      hit |= static_cast<std::uint32_t>(d2 < r2) << l;
    }
    mask &= ~hit;
  }
  for (std::size_t s = 0; s < k.blx.size() && mask != 0; ++s) {
    const double lx = k.blx[s], ly = k.bly[s], lz = k.blz[s];
    const double hx = k.bhx[s], hy = k.bhy[s], hz = k.bhz[s];
    std::uint32_t hit = 0;
    for (int l = 0; l < w; ++l) {
      const bool inside = X[l] > lx && X[l] < hx && Y[l] > ly && Y[l] < hy &&
                          (k.wd != 3 || (Z[l] > lz && Z[l] < hz));
      hit |= static_cast<std::uint32_t>(inside) << l;
    }
    mask &= ~hit;
  }
  for (std::size_t s = 0; s < k.cax.size() && mask != 0; ++s) {
    const double ax = k.cax[s], ay = k.cay[s], az = k.caz[s];
    const double ux = k.cux[s], uy = k.cuy[s], uz = k.cuz[s];
    const double inv = k.cinv[s], r2 = k.cr2[s];
    std::uint32_t hit = 0;
    for (int l = 0; l < w; ++l) {
      const double d2 = k.wd == 3
                            ? dist2_point_segment_3d(X[l], Y[l], Z[l], ax, ay, az, ux, uy, uz, inv)
                            : dist2_point_segment_2d(X[l], Y[l], ax, ay, ux, uy, inv);
      hit |= static_cast<std::uint32_t>(d2 < r2) << l;
    }
    mask &= ~hit;
  }
  return mask;
}

Validator::MotionCheck Validator::check_motion(std::span<const double> a, std::span<const double> b,
                                               double resolution) const {
  const int d = impl_->cdim;
  if (static_cast<int>(a.size()) != d || static_cast<int>(b.size()) != d) {
    throw ContractViolation("motion check: configuration dimension mismatch");
  }
  // Canonical direction: cached edge validity must not depend on traversal
  // order, so both directions evaluate the exact same float states.
  if (std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end())) {
    std::swap(a, b);
  }
  const double dist = fcit::distance(a, b);
  const int m = motion_state_count(dist, resolution);

  int nbits = 0;
  while ((1 << nbits) < m) ++nbits;
  const int padded = 1 << nbits;
  const double last = static_cast<double>(m - 1);

  ValidationBlock block(d, impl_->width);
  std::vector<double> state(static_cast<std::size_t>(d));
  long long checked = 0;
  for (int i = 0; i < padded;) {
    block.clear();
    for (; i < padded && block.occupancy() < impl_->width; ++i) {
      const int j = reverse_bits(i, nbits);
      if (j >= m) continue;
      const double t = static_cast<double>(j) / last;
      for (int c = 0; c < d; ++c) {
        state[static_cast<std::size_t>(c)] =
            a[static_cast<std::size_t>(c)] +
            t * (b[static_cast<std::size_t>(c)] - a[static_cast<std::size_t>(c)]);
      }
      block.push(state);
    }
    if (block.occupancy() == 0) continue;
    checked += block.occupancy();
    const std::uint32_t full = block.occupancy() >= 32 ? 0xffffffffu
                                                       : ((1u << block.occupancy()) - 1u);
    if (valid_mask(block) != full) return {false, checked};
  }
  return {true, checked};
}

bool validate_state(const RobotModel& model, const Environment& env, const Config& q) {
  return Validator(model, env).is_valid(q.view());
}

std::uint32_t validate_states_block(const RobotModel& model, const Environment& env,
                                    const ValidationBlock& block) {
  return Validator(model, env, block.width()).valid_mask(block);
}

bool validate_motion(const RobotModel& model, const Environment& env, const Config& a,
                     const Config& b, double resolution) {
  return Validator(model, env).check_motion(a.view(), b.view(), resolution).valid;
}

}  // namespace fcit
