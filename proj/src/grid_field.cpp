#include "mrlab/grid_field.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <random>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "mrlab/errors.hpp"

namespace mrlab {

namespace {

bool is_power_of_two(int N) { return N > 0 && (N & (N - 1)) == 0; }

// FFTW plans are created under a lock and executed with the new-array interface.
class PlanCache {
public:
    static PlanCache& instance() {
        static PlanCache cache;
        return cache;
    }

    fftw_plan get(int n, int N, int sign) {
        std::lock_guard<std::mutex> lock(mu_);
        const auto key = std::make_tuple(n, N, sign);
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;
        std::vector<cplx> scratch(static_cast<std::size_t>(n == 1 ? N : N * N));
        auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
        const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
        fftw_plan p = n == 1 ? fftw_plan_dft_1d(N, buf, buf, sign, flags) : fftw_plan_dft_2d(N, N, buf, buf, sign, flags);
        if (!p) throw NumericError("FFTW plan creation failed");
        plans_.emplace(key, p);
        return p;
    }

private:
    std::mutex mu_;
    std::map<std::tuple<int, int, int>, fftw_plan> plans_;
};

void transform(int n, int N, std::vector<cplx>& data, int sign) {
    fftw_plan p = PlanCache::instance().get(n, N, sign);
    auto* buf = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(p, buf, buf);
}

}  // namespace

GridField::GridField(int n, double L, int N) : n_(n), L_(L), N_(N) {
    if (n != 1 && n != 2) throw InvalidSpec("dimension must be 1 or 2");
    if (!(L > 0.0) || !std::isfinite(L)) throw InvalidSpec("box half-width must be positive");
    if (N < 32 || !is_power_of_two(N)) throw InvalidSpec("samples per axis must be a power of two >= 32");
    values_.assign(n == 1 ? static_cast<std::size_t>(N) : static_cast<std::size_t>(N) * N, cplx(0.0, 0.0));
}

GridField GridField::from_function(double L, int N, const std::function<cplx(double)>& f) {
    GridField g(1, L, N);
    for (int j = 0; j < N; ++j) g.values_[j] = f(g.coordinate(j));
    return g;
}

GridField GridField::from_function(double L, int N, const std::function<cplx(double, double)>& f) {
    GridField g(2, L, N);
    for (int iy = 0; iy < N; ++iy)
        for (int ix = 0; ix < N; ++ix)
            g.values_[static_cast<std::size_t>(iy) * N + ix] = f(g.coordinate(ix), g.coordinate(iy));
    return g;
}

double GridField::cell_volume() const { return std::pow(space_step(), n_); }

double GridField::frequency(int j) const {
    const int m = j < N_ / 2 ? j : j - N_;
    return std::numbers::pi * m / L_;
}

double GridField::nyquist() const { return std::numbers::pi * (N_ / 2) / L_; }

double GridField::lowest_frequency() const { return std::numbers::pi / L_; }

bool GridField::same_geometry(const GridField& o) const { return n_ == o.n_ && N_ == o.N_ && L_ == o.L_; }

double GridField::lp_norm(double p) const {
    if (std::isinf(p)) {
        double m = 0.0;
        for (const cplx& v : values_) m = std::max(m, std::abs(v));
        return m;
    }
    if (p == 1.0) {
        double s = 0.0;
        for (const cplx& v : values_) s += std::abs(v);
        return s * cell_volume();
    }
    if (p == 2.0) {
        double s = 0.0;
        for (const cplx& v : values_) s += std::norm(v);
        return std::sqrt(s * cell_volume());
    }
    if (p > 1.0) {
        double s = 0.0;
        for (const cplx& v : values_) s += std::pow(std::abs(v), p);
        return std::pow(s * cell_volume(), 1.0 / p);
    }
    throw InvalidSpec("unsupported Lebesgue exponent");
}

double GridField::round_trip_error() const {
    GridField back = fourier_inverse(*this, fourier_forward(*this));
    double m = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i) m = std::max(m, std::abs(back.values_[i] - values_[i]));
    return m;
}

GridField& GridField::operator+=(const GridField& o) {
    if (!same_geometry(o)) throw InvalidSpec("geometry mismatch");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
}

GridField& GridField::operator-=(const GridField& o) {
    if (!same_geometry(o)) throw InvalidSpec("geometry mismatch");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
    return *this;
}

GridField& GridField::operator*=(double a) {
    for (cplx& v : values_) v *= a;
    return *this;
}

GridField operator-(GridField a, const GridField& b) { return a -= b; }
GridField operator+(GridField a, const GridField& b) { return a += b; }
GridField operator*(double s, GridField a) { return a *= s; }

void GridField::write(const std::string& csv_path, const std::string& json_path) const {
    std::ofstream csv(csv_path);
    if (!csv) throw InvalidSpec("cannot write " + csv_path);
    csv << "index,re,im\n";
    csv.precision(17);
    for (std::size_t i = 0; i < values_.size(); ++i) csv << i << ',' << values_[i].real() << ',' << values_[i].imag() << '\n';
    nlohmann::ordered_json meta;
    meta["schema"] = "mrlab/1";
    meta["n"] = n_;
    meta["L"] = L_;
    meta["N"] = N_;
    std::ofstream js(json_path);
    if (!js) throw InvalidSpec("cannot write " + json_path);
    js << meta.dump(2) << '\n';
}

GridField GridField::read(const std::string& csv_path, const std::string& json_path) {
    std::ifstream js(json_path);
    if (!js) throw InvalidSpec("cannot read " + json_path);
    nlohmann::json meta;
    try {
        js >> meta;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidSpec(std::string("bad field sidecar: ") + e.what());
    }
    GridField g(meta.at("n").get<int>(), meta.at("L").get<double>(), meta.at("N").get<int>());
    std::ifstream csv(csv_path);
    if (!csv) throw InvalidSpec("cannot read " + csv_path);
    std::string line;
    std::getline(csv, line);
    if (line != "index,re,im") throw InvalidSpec("bad field CSV header");
    std::size_t count = 0;
    while (std::getline(csv, line)) {
        if (line.empty()) continue;
        std::istringstream is(line);
        std::size_t idx;
        double re, im;
        char c1, c2;
        if (!(is >> idx >> c1 >> re >> c2 >> im) || c1 != ',' || c2 != ',' || idx >= g.size())
            throw InvalidSpec("bad field CSV row: " + line);
        g.values_[idx] = cplx(re, im);
        ++count;
    }
    if (count != g.size()) throw InvalidSpec("field CSV has wrong number of rows");
    return g;
}

std::vector<double> squared_frequencies(const GridField& g) {
    const int N = g.samples();
    std::vector<double> xi2(N);
    for (int j = 0; j < N; ++j) xi2[j] = g.frequency(j) * g.frequency(j);
    if (g.dim() == 1) return xi2;
    std::vector<double> out(static_cast<std::size_t>(N) * N);
    for (int iy = 0; iy < N; ++iy)
        for (int ix = 0; ix < N; ++ix) out[static_cast<std::size_t>(iy) * N + ix] = xi2[ix] + xi2[iy];
    return out;
}

std::vector<cplx> fourier_forward(const GridField& f) {
    std::vector<cplx> data = f.values();
    transform(f.dim(), f.samples(), data, FFTW_FORWARD);
    return data;
}

GridField fourier_inverse(const GridField& like, std::vector<cplx> coeffs) {
    if (coeffs.size() != like.size()) throw InvalidSpec("spectrum size mismatch");
    transform(like.dim(), like.samples(), coeffs, FFTW_BACKWARD);
    const double scale = 1.0 / static_cast<double>(coeffs.size());
    GridField out(like.dim(), like.half_width(), like.samples());
    for (std::size_t i = 0; i < coeffs.size(); ++i) out[i] = coeffs[i] * scale;
    return out;
}

GridField band_limited_random_field(int n, double L, int N, double cutoff, std::uint64_t seed) {
    GridField g(n, L, N);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const std::vector<double> xi2 = squared_frequencies(g);
    std::vector<cplx> spec(g.size());
    for (std::size_t i = 0; i < spec.size(); ++i) {
        if (xi2[i] > 0.0 && xi2[i] <= cutoff * cutoff) spec[i] = cplx(gauss(rng), gauss(rng));
    }
    GridField f = fourier_inverse(g, std::move(spec));
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = cplx(f[i].real(), 0.0);
    // normalize to unit sup norm
    const double m = f.lp_norm(std::numeric_limits<double>::infinity());
    if (m > 0.0) f *= 1.0 / m;
    return f;
}

}  // namespace mrlab
