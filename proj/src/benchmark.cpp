#include "rotshed/benchmark.hpp"

#include <random>

namespace rotshed {

namespace {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double draw(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

struct CategoryRanges {
  double a1_lo, a1_hi;
  double a2_lo, a2_hi;
  double a3_lo, a3_hi;
  long long k_max;
  long long d_min, d_max;
};

CategoryRanges ranges_for(ZoneCategory cat) {
  switch (cat) {
    case ZoneCategory::Industrial:
      return {50.0, 150.0, 20.0, 70.0, 70.0, 120.0, 50, 8, 16};
    case ZoneCategory::Residential:
      return {50.0, 150.0, 70.0, 120.0, 20.0, 70.0, 200, 2, 8};
    case ZoneCategory::Commercial:
      return {500.0, 600.0, 70.0, 120.0, 70.0, 120.0, 20, 1, 2};
  }
  return {};
}

}  // namespace

ProblemInstance benchmark_instance(std::uint64_t seed) {
  ProblemInstance inst;
  inst.e_sf_mwh = 5e5;
  inst.c_delta = 500.0;
  inst.horizon_days = 30;
  std::mt19937_64 rng(seed);
  for (int id = 1; id <= 30; ++id) {
    ZoneCategory cat = ZoneCategory::Residential;
    if (id <= 6)
      cat = ZoneCategory::Industrial;
    else if (id >= 28)
      cat = ZoneCategory::Commercial;
    const CategoryRanges r = ranges_for(cat);
    ZoneSpec zone;
    zone.id = id;
    zone.category = cat;
    zone.p_avg_mw = draw(rng, 500.0, 1000.0);
    zone.coeffs.a1 = draw(rng, r.a1_lo, r.a1_hi);
    zone.coeffs.a2 = draw(rng, r.a2_lo, r.a2_hi);
    zone.coeffs.a3 = draw(rng, r.a3_lo, r.a3_hi);
    zone.k_max = r.k_max;
    zone.d_min_slots = r.d_min;
    zone.d_max_slots = r.d_max;
    inst.zones.push_back(zone);
  }
  inst.validate();
  return inst;
}

}  // namespace rotshed
