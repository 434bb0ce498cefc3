#include "besovlab/divcurl.hpp"

#include <cmath>
#include <stdexcept>

namespace besovlab {

namespace {

// Signed index into the strictly-upper storage: (i, j) -> (slot, sign).
std::pair<int, double> upper_slot(int dim, int i, int j) {
    if (i == j) return {-1, 0.0};
    double sign = 1.0;
    if (i > j) { std::swap(i, j); sign = -1.0; }
    int slot = 0;
    for (int a = 0; a < i; ++a) slot += dim - 1 - a;
    slot += j - i - 1;
    return {slot, sign};
}

} // namespace

DivCurl divcurl_split(const VectorField& u) {
    const int dim = u.dim();
    if (dim < 1) throw std::invalid_argument("divcurl_split: empty field");
    DivCurl out{divergence(u), curl(u), {}};
    for (const Field& c : u.comp) out.means.push_back(c.mean());
    return out;
}

VectorField divcurl_reconstruct(const DivCurl& dc, double tol) {
    const Grid& g = dc.div.grid();
    const int dim = g.dim();
    if (static_cast<int>(dc.means.size()) != dim)
        throw std::invalid_argument("divcurl_reconstruct: means/dim mismatch");
    if (dc.curl.dim != dim)
        throw std::invalid_argument("divcurl_reconstruct: curl/dim mismatch");

    const auto& dhat = dc.div.spectral();
    std::vector<const std::vector<std::complex<double>>*> what;
    for (const Field& w : dc.curl.upper) {
        require_same_grid(w.grid(), g, "divcurl_reconstruct");
        what.push_back(&w.spectral());
    }

    const double scale = g.wavenumber_scale();
    const std::size_t n = g.size();
    std::vector<std::vector<std::complex<double>>> uhat(
        dim, std::vector<std::complex<double>>(n));
    const std::complex<double> mi(0.0, -1.0);
    for (std::size_t lin = 0; lin < n; ++lin) {
        auto f = g.freqs(lin);
        double k2 = 0.0;
        for (int d = 0; d < dim; ++d) k2 += double(f[d]) * f[d];
        if (k2 == 0.0) continue;
        k2 *= scale * scale;
        for (int i = 0; i < dim; ++i) {
            std::complex<double> acc = scale * f[i] * dhat[lin];
            for (int j = 0; j < dim; ++j) {
                auto [slot, sign] = upper_slot(dim, i, j);
                if (slot >= 0) acc += scale * f[j] * sign * (*what[slot])[lin];
            }
            uhat[i][lin] = mi * acc / k2;
        }
    }
    VectorField u;
    for (int i = 0; i < dim; ++i) {
        uhat[i][0] = dc.means[i];
        u.comp.push_back(Field::from_spectral(g, std::move(uhat[i])));
    }

    // Range check: the round trip must return the supplied data.
    DivCurl back = divcurl_split(u);
    double num = lp_norm(back.div - dc.div, 2.0);
    double den = lp_norm(dc.div, 2.0);
    for (std::size_t s = 0; s < dc.curl.upper.size(); ++s) {
        num += lp_norm(back.curl.upper[s] - dc.curl.upper[s], 2.0);
        den += lp_norm(dc.curl.upper[s], 2.0);
    }
    if (num > tol * std::max(den, 1e-300))
        throw std::invalid_argument(
            "divcurl_reconstruct: inconsistent data (pair is not the div/curl "
            "of any velocity field; relative residual " + std::to_string(num / std::max(den, 1e-300)) + ")");
    return u;
}

} // namespace besovlab
