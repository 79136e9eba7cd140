#pragma once

// Periodic 4D grid T^4 = R^4 / (L0 Z x ... x L3 Z), site-indexed fields,
// and deterministic reductions.  Site ordering is lexicographic with axis 3
// fastest; all L^2 norms carry the volume weight prod(h_mu).

#include <array>
#include <cstdint>
#include <vector>

#include "spinsq/errors.hpp"

namespace spinsq {

struct LatticeGrid {
    std::array<int, 4> n{};         // sites per axis, even and >= 4
    std::array<double, 4> period{1.0, 1.0, 1.0, 1.0};

    LatticeGrid() = default;
    LatticeGrid(std::array<int, 4> dims, std::array<double, 4> periods = {1.0, 1.0, 1.0, 1.0})
        : n(dims), period(periods) {
        for (int mu = 0; mu < 4; ++mu) {
            if (n[mu] < 4 || n[mu] % 2 != 0)
                throw ShapeMismatch("LatticeGrid: sites per axis must be even and >= 4");
            if (!(period[mu] > 0.0)) throw ShapeMismatch("LatticeGrid: periods must be positive");
        }
    }
    static LatticeGrid cubic(int nsites, double length = 1.0) {
        return LatticeGrid({nsites, nsites, nsites, nsites}, {length, length, length, length});
    }

    double spacing(int mu) const { return period[mu] / n[mu]; }
    double volume_element() const { return spacing(0) * spacing(1) * spacing(2) * spacing(3); }
    std::int64_t volume() const {
        return std::int64_t(n[0]) * n[1] * n[2] * n[3];
    }
    std::array<std::int64_t, 4> strides() const {
        return {std::int64_t(n[1]) * n[2] * n[3], std::int64_t(n[2]) * n[3], std::int64_t(n[3]), 1};
    }
    std::int64_t index(std::array<int, 4> x) const {
        const auto s = strides();
        return x[0] * s[0] + x[1] * s[1] + x[2] * s[2] + x[3] * s[3];
    }
    std::array<int, 4> site(std::int64_t idx) const {
        const auto s = strides();
        std::array<int, 4> x;
        x[0] = int(idx / s[0]); idx -= x[0] * s[0];
        x[1] = int(idx / s[1]); idx -= x[1] * s[1];
        x[2] = int(idx / s[2]); idx -= x[2] * s[2];
        x[3] = int(idx);
        return x;
    }
    /// Coordinates of a site (corner convention): x_mu = h_mu * i_mu.
    std::array<double, 4> coords(std::array<int, 4> x) const {
        return {x[0] * spacing(0), x[1] * spacing(1), x[2] * spacing(2), x[3] * spacing(3)};
    }

    bool operator==(const LatticeGrid& o) const { return n == o.n && period == o.period; }
    bool operator!=(const LatticeGrid& o) const { return !(*this == o); }
};

template <class T>
class Field {
  public:
    Field() = default;
    explicit Field(const LatticeGrid& g) : grid_(g), data_(size_t(g.volume())) {}
    Field(const LatticeGrid& g, const T& fill) : grid_(g), data_(size_t(g.volume()), fill) {}

    const LatticeGrid& grid() const { return grid_; }
    std::int64_t size() const { return std::int64_t(data_.size()); }
    T& operator[](std::int64_t i) { return data_[size_t(i)]; }
    const T& operator[](std::int64_t i) const { return data_[size_t(i)]; }
    T& at(std::array<int, 4> x) { return data_[size_t(grid_.index(x))]; }
    const T& at(std::array<int, 4> x) const { return data_[size_t(grid_.index(x))]; }
    T* data() { return data_.data(); }
    const T* data() const { return data_.data(); }

  private:
    LatticeGrid grid_;
    std::vector<T> data_;
};

inline void require_same_grid(const LatticeGrid& a, const LatticeGrid& b, const char* where) {
    if (a != b) throw ShapeMismatch(std::string(where) + ": grid shapes differ");
}

// Deterministic pairwise (tree) summation in a fixed order; used for every
// reduction so identical inputs give identical results.
template <class F>
double pairwise_sum(std::int64_t lo, std::int64_t hi, F&& term) {
    if (hi - lo <= 64) {
        double acc = 0.0;
        for (std::int64_t i = lo; i < hi; ++i) acc += term(i);
        return acc;
    }
    const std::int64_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(lo, mid, term) + pairwise_sum(mid, hi, term);
}

} // namespace spinsq
