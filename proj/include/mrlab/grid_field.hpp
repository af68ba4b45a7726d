#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace mrlab {

using cplx = std::complex<double>;

// Complex samples on the periodic box [-L, L)^n, row-major with x fastest.
class GridField {
public:
    GridField() = default;
    GridField(int n, double L, int N);

    static GridField from_function(double L, int N, const std::function<cplx(double)>& f);
    static GridField from_function(double L, int N, const std::function<cplx(double, double)>& f);

    int dim() const { return n_; }
    double half_width() const { return L_; }
    int samples() const { return N_; }
    std::size_t size() const { return values_.size(); }
    double space_step() const { return 2.0 * L_ / N_; }
    double cell_volume() const;
    double coordinate(int j) const { return -L_ + j * space_step(); }
    // signed frequency pi*m/L for storage index j
    double frequency(int j) const;
    double nyquist() const;
    double lowest_frequency() const;
    bool same_geometry(const GridField& o) const;

    std::vector<cplx>& values() { return values_; }
    const std::vector<cplx>& values() const { return values_; }
    cplx& operator[](std::size_t i) { return values_[i]; }
    const cplx& operator[](std::size_t i) const { return values_[i]; }

    // p = 1, 2 or +inf; Riemann sums with the cell volume
    double lp_norm(double p) const;
    double round_trip_error() const;

    GridField& operator+=(const GridField& o);
    GridField& operator-=(const GridField& o);
    GridField& operator*=(double a);

    // CSV "index,re,im" plus JSON sidecar {n, L, N}
    void write(const std::string& csv_path, const std::string& json_path) const;
    static GridField read(const std::string& csv_path, const std::string& json_path);

private:
    int n_ = 1;
    double L_ = 1.0;
    int N_ = 32;
    std::vector<cplx> values_;
};

GridField operator-(GridField a, const GridField& b);
GridField operator+(GridField a, const GridField& b);
GridField operator*(double s, GridField a);

// |xi|^2 at every storage index of the spectrum.
std::vector<double> squared_frequencies(const GridField& geometry);

// Unnormalized forward DFT, in storage order.
std::vector<cplx> fourier_forward(const GridField& f);
// Inverse DFT divided by N^n onto the geometry of `like`.
GridField fourier_inverse(const GridField& like, std::vector<cplx> coeffs);

// Real field with random spectrum supported in 0 < |xi| <= cutoff.
GridField band_limited_random_field(int n, double L, int N, double cutoff, std::uint64_t seed);

}  // namespace mrlab
