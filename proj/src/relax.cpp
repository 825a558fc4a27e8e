#include "rotshed/relax.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace rotshed {

namespace {

std::string var_name(const char* prefix, int id) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%s_%d", prefix, id);
  return buf;
}

std::string row_name(const char* prefix, int id) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%s_%d", prefix, id);
  return buf;
}

// %.17g keeps doubles lossless in the text rendering.
void append_number(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
}

void append_term(std::string& out, double coeff, const std::string& name, bool first) {
  if (first) {
    if (coeff < 0) out += "- ";
    else out += "";
  } else {
    out += coeff < 0 ? " - " : " + ";
  }
  append_number(out, std::abs(coeff));
  out += " ";
  out += name;
}

}  // namespace

Relaxation build_relaxation(const ProblemInstance& instance, const RelaxOptions& options) {
  instance.validate();
  const int n = instance.num_zones();
  Relaxation rel;
  rel.layout.num_zones = n;
  IntegerLinearProgram& p = rel.program;
  p.num_vars = rel.layout.num_vars();
  p.objective.assign(p.num_vars, 0.0);
  p.lower.assign(p.num_vars, 0);
  p.upper.assign(p.num_vars, 0);
  p.var_names.assign(p.num_vars, "");

  for (int i = 0; i < n; ++i) {
    const ZoneSpec& z = instance.zones[i];
    const int ki = rel.layout.k_index(i);
    const int di = rel.layout.d_index(i);
    const int wi = rel.layout.w_index(i);
    p.var_names[ki] = var_name("k", z.id);
    p.var_names[di] = var_name("d", z.id);
    p.var_names[wi] = var_name("w", z.id);
    p.lower[ki] = 0;
    p.upper[ki] = z.k_max;
    p.lower[di] = z.d_min_slots;
    p.upper[di] = z.d_max_slots;
    p.lower[wi] = 0;
    p.upper[wi] = z.k_max * z.d_max_slots;
    p.objective[ki] = z.coeffs.a3;
    p.objective[di] = 0.25 * z.coeffs.a2;
    p.objective[wi] = 0.25 * z.coeffs.a1;
  }

  auto add_row = [&](std::string name, Relation r, double rhs) -> std::vector<double>& {
    LinearConstraint c;
    c.coeffs.assign(p.num_vars, 0.0);
    c.rel = r;
    c.rhs = rhs;
    c.name = std::move(name);
    p.constraints.push_back(std::move(c));
    return p.constraints.back().coeffs;
  };

  for (int i = 0; i < n; ++i) {
    const ZoneSpec& z = instance.zones[i];
    const int ki = rel.layout.k_index(i);
    const int di = rel.layout.d_index(i);
    const int wi = rel.layout.w_index(i);
    const double dmin = static_cast<double>(z.d_min_slots);
    const double dmax = static_cast<double>(z.d_max_slots);
    const double kmax = static_cast<double>(z.k_max);

    // w >= d_min * k
    {
      auto& c = add_row(row_name("env_lo1", z.id), Relation::GreaterEq, 0.0);
      c[wi] = 1.0;
      c[ki] = -dmin;
    }
    // w <= d_max * k; forces w = 0 whenever k = 0.
    {
      auto& c = add_row(row_name("env_hi1", z.id), Relation::LessEq, 0.0);
      c[wi] = 1.0;
      c[ki] = -dmax;
    }
    // w >= d_max*k + k_max*d - k_max*d_max
    {
      auto& c = add_row(row_name("env_lo2", z.id), Relation::GreaterEq, -kmax * dmax);
      c[wi] = 1.0;
      c[ki] = -dmax;
      c[di] = -kmax;
    }
    // w <= k_max * d
    {
      auto& c = add_row(row_name("env_hi2", z.id), Relation::LessEq, 0.0);
      c[wi] = 1.0;
      c[di] = -kmax;
    }
    if (options.classical_upper_envelope) {
      // w <= d_min*k + k_max*d - k_max*d_min
      auto& c = add_row(row_name("env_hi3", z.id), Relation::LessEq, -kmax * dmin);
      c[wi] = 1.0;
      c[ki] = -dmin;
      c[di] = -kmax;
    }
  }

  {
    auto& c = add_row("shortfall", Relation::GreaterEq, instance.e_sf_mwh);
    for (int i = 0; i < n; ++i)
      c[rel.layout.w_index(i)] = 0.25 * instance.zones[i].p_avg_mw;
  }

  // Fairness over adjacent ids, both one-sided rows per pair.
  for (int i = 0; i + 1 < n; ++i) {
    const ZoneSpec& a = instance.zones[i];
    const ZoneSpec& b = instance.zones[i + 1];
    auto fill = [&](std::vector<double>& c, double sign) {
      c[rel.layout.k_index(i)] = sign * a.coeffs.a3;
      c[rel.layout.d_index(i)] = sign * 0.25 * a.coeffs.a2;
      c[rel.layout.w_index(i)] = sign * 0.25 * a.coeffs.a1;
      c[rel.layout.k_index(i + 1)] = -sign * b.coeffs.a3;
      c[rel.layout.d_index(i + 1)] = -sign * 0.25 * b.coeffs.a2;
      c[rel.layout.w_index(i + 1)] = -sign * 0.25 * b.coeffs.a1;
    };
    {
      auto& c = add_row(row_name("fair_hi", a.id), Relation::LessEq, instance.c_delta);
      fill(c, 1.0);
    }
    {
      auto& c = add_row(row_name("fair_lo", a.id), Relation::GreaterEq, -instance.c_delta);
      fill(c, 1.0);
    }
  }

  return rel;
}

double relaxed_objective(const ProblemInstance& instance, const ShedPlan& plan) {
  const std::size_t n = instance.zones.size();
  if (plan.k.size() != n || plan.d_slots.size() != n || plan.w_slots.size() != n)
    throw DimensionError("plan size does not match instance zone count");
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const CostCoefficients& c = instance.zones[i].coeffs;
    total += 0.25 * c.a1 * static_cast<double>(plan.w_slots[i]) +
             0.25 * c.a2 * static_cast<double>(plan.d_slots[i]) +
             c.a3 * static_cast<double>(plan.k[i]);
  }
  return total;
}

ShedPlan plan_from_point(const VariableLayout& layout, const std::vector<long long>& x) {
  if (static_cast<int>(x.size()) != layout.num_vars())
    throw DimensionError("point size does not match layout");
  ShedPlan plan = ShedPlan::zeros(layout.num_zones);
  for (int i = 0; i < layout.num_zones; ++i) {
    plan.k[i] = x[layout.k_index(i)];
    plan.d_slots[i] = x[layout.d_index(i)];
    plan.w_slots[i] = x[layout.w_index(i)];
  }
  return plan;
}

std::vector<long long> point_from_plan(const VariableLayout& layout, const ShedPlan& plan) {
  if (static_cast<int>(plan.size()) != layout.num_zones)
    throw DimensionError("plan size does not match layout");
  std::vector<long long> x(layout.num_vars(), 0);
  for (int i = 0; i < layout.num_zones; ++i) {
    x[layout.k_index(i)] = plan.k[i];
    x[layout.d_index(i)] = plan.d_slots[i];
    x[layout.w_index(i)] = plan.w_slots[i];
  }
  return x;
}

std::string export_lp_text(const IntegerLinearProgram& program) {
  std::string out;
  out += "Minimize\n obj:";
  bool first = true;
  for (int j = 0; j < program.num_vars; ++j) {
    if (program.objective[j] == 0.0) continue;
    out += " ";
    append_term(out, program.objective[j], program.var_names[j], first);
    first = false;
  }
  if (first) out += " 0";
  out += "\nSubject To\n";
  for (const LinearConstraint& c : program.constraints) {
    out += " " + c.name + ":";
    bool row_first = true;
    for (int j = 0; j < program.num_vars; ++j) {
      if (c.coeffs[j] == 0.0) continue;
      out += " ";
      append_term(out, c.coeffs[j], program.var_names[j], row_first);
      row_first = false;
    }
    if (row_first) out += " 0";
    switch (c.rel) {
      case Relation::LessEq: out += " <= "; break;
      case Relation::GreaterEq: out += " >= "; break;
      case Relation::Equal: out += " = "; break;
    }
    append_number(out, c.rhs);
    out += "\n";
  }
  out += "Bounds\n";
  for (int j = 0; j < program.num_vars; ++j) {
    out += " ";
    append_number(out, static_cast<double>(program.lower[j]));
    out += " <= " + program.var_names[j] + " <= ";
    append_number(out, static_cast<double>(program.upper[j]));
    out += "\n";
  }
  out += "General\n";
  for (int j = 0; j < program.num_vars; ++j) out += " " + program.var_names[j];
  out += "\nEnd\n";
  return out;
}

}  // namespace rotshed
