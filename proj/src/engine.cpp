#include "regge/engine.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace regge {

double Expansion::evaluate(double hbar) const {
    double sum = 0.0;
    for (int k = order(); k >= 0; --k) sum = alpha[k] + hbar * sum;
    return sum;
}

CoeffTable::CoeffTable(const Orbit& orbit, int nodes, int order, MassTerms mass_terms)
    : orbit_(orbit),
      nodes_(nodes),
      order_(order),
      width_(2 * order + 2),
      mass_terms_(mass_terms) {
    if (nodes < 0) throw ValidationError("node count must be non-negative");
    if (order < 0) throw ValidationError("expansion order must be non-negative");
    if (static_cast<int>(orbit_.v.size()) < width_ + 3)
        throw ValidationError("orbit Taylor data too short for this order");
    c_.assign(order_ + 1, std::vector<double>(width_ + 1, 0.0));
    filled_.assign(order_ + 1, -1);
}

double CoeffTable::entry(int k, int i) const { return c_[k][i]; }

double CoeffTable::at(int k, int i) const {
    if (k < 0 || k > order_ || i < 0 || i > width_)
        throw std::out_of_range("CoeffTable::at(" + std::to_string(k) + "," +
                                std::to_string(i) + ")");
    if (i > filled_[k])
        throw DependencyOrderError("table entry not yet computed");
    return c_[k][i];
}

int CoeffTable::filled_up_to(int k) const {
    if (k < 0 || k > order_) throw std::out_of_range("row index");
    return filled_[k];
}

void CoeffTable::fill_zeroth_row() {
    if (filled_[0] >= 0) throw DependencyOrderError("zeroth row already filled");
    const double w = orbit_.omega;
    const double w2 = w * w;
    c_[0][0] = -w;
    for (int i = 1; i <= width_; ++i) {
        double conv = 0.0;
        for (int j = 1; j <= i - 1; ++j) conv += c_[0][j] * c_[0][i - j];
        c_[0][i] = (conv - w2 * orbit_.a[i]) / (2.0 * w);
    }
    filled_[0] = width_;
    alpha_.assign(1, orbit_.alpha0);
}

double CoeffTable::recurrence_entry(int k, int i) const {
    const double r0 = orbit_.r0;
    double t = -(i - 2 * k + 3) / r0 * c_[k - 1][i];
    for (int j = 1; j <= k - 1; ++j) {
        double conv = 0.0;
        for (int p = 0; p <= i; ++p) conv += c_[j][p] * c_[k - j][i - p];
        t -= conv;
    }
    double conv0 = 0.0;
    for (int p = 1; p <= i; ++p) conv0 += c_[0][p] * c_[k][i - p];
    t -= 2.0 * conv0;
    if (i - 2 * k + 2 >= 0) {
        double abra = alpha_[k - 1];
        for (int j = 0; j <= k; ++j) abra += alpha_[j] * alpha_[k - j];
        const double sgn = (i % 2) ? -1.0 : 1.0;
        t += sgn * (i - 2 * k + 3) / (r0 * r0) * abra;
        t += 2.0 * mass_terms_.term(k) * orbit_.v[i - 2 * k + 2];
    }
    return t / (2.0 * c_[0][0]);
}

void CoeffTable::fill_row_low(int k) {
    if (k < 1 || k > order_) throw std::out_of_range("row index");
    if (filled_[k - 1] != width_ || static_cast<int>(alpha_.size()) != k)
        throw DependencyOrderError("previous rows or alphas incomplete");
    if (filled_[k] >= 0) throw DependencyOrderError("row already started");
    for (int i = 0; i <= 2 * k - 3; ++i) c_[k][i] = recurrence_entry(k, i);
    // quantization condition fixes the i = 2k-2 entry directly
    c_[k][2 * k - 2] = (k == 1) ? nodes_ / orbit_.r0 : 0.0;
    filled_[k] = 2 * k - 2;
}

double CoeffTable::alpha_step(int k) {
    if (k < 1 || k > order_) throw std::out_of_range("row index");
    if (filled_[k] != 2 * k - 2 || static_cast<int>(alpha_.size()) != k)
        throw DependencyOrderError("alpha_step requires the low-column phase of row k");
    const double r0 = orbit_.r0;
    double cross = 0.0;
    for (int j = 1; j <= k - 1; ++j) cross += alpha_[j] * alpha_[k - j];
    double conv = 0.0;
    for (int j = 0; j <= k; ++j)
        for (int p = 0; p <= 2 * k - 2; ++p) conv += c_[j][p] * c_[k - j][2 * k - 2 - p];
    const double source = mass_terms_.term(k) * r0 * r0 * orbit_.v[1];
    const double ak = (-alpha_[k - 1] - cross + r0 * c_[k - 1][2 * k - 2] +
                       r0 * r0 * conv + source) /
                      (2.0 * alpha_[0]);
    alpha_.push_back(ak);
    return ak;
}

void CoeffTable::fill_row_high(int k) {
    if (k < 1 || k > order_) throw std::out_of_range("row index");
    if (filled_[k] != 2 * k - 2 || static_cast<int>(alpha_.size()) != k + 1)
        throw DependencyOrderError("fill_row_high requires alpha_k");
    for (int i = 2 * k - 1; i <= width_; ++i) c_[k][i] = recurrence_entry(k, i);
    filled_[k] = width_;
}

Expansion expand(const Potential& pot, double energy, double mass, int nodes, int order) {
    return expand(pot, energy, mass, MassTerms{}, nodes, order);
}

Expansion expand(const Potential& pot, double energy, double mass0, MassTerms mass_terms,
                 int nodes, int order) {
    if (order < 0) throw ValidationError("expansion order must be non-negative");
    const Orbit orbit = build_orbit(pot, energy, mass0, 2 * order + 4);
    CoeffTable table(orbit, nodes, order, mass_terms);
    table.fill_zeroth_row();
    for (int k = 1; k <= order; ++k) {
        table.fill_row_low(k);
        table.alpha_step(k);
        table.fill_row_high(k);
    }
    Expansion out;
    out.alpha = table.alphas();
    out.energy = energy;
    out.nodes = nodes;
    out.mass0 = mass0;
    out.mass_terms = mass_terms;
    return out;
}

} // namespace regge
