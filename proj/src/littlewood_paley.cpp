#include "besovlab/littlewood_paley.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace besovlab {

namespace {

// Normalized bump integral B(x) = int_0^x exp(-1/(t(1-t))) dt / Z on [0,1],
// tabulated once with composite Simpson and evaluated by monotone cubic
// Hermite interpolation (exact derivatives at the nodes).
struct BumpTable {
    static constexpr int K = 4096;
    std::vector<double> value;  // B at nodes
    std::vector<double> deriv;  // B' at nodes

    static double bump(double t) {
        if (t <= 0.0 || t >= 1.0) return 0.0;
        return std::exp(-1.0 / (t * (1.0 - t)));
    }

    BumpTable() {
        value.resize(K + 1);
        deriv.resize(K + 1);
        const double h = 1.0 / K;
        value[0] = 0.0;
        for (int i = 0; i < K; ++i) {
            double a = i * h, b = (i + 1) * h;
            value[i + 1] = value[i] + h / 6.0 * (bump(a) + 4.0 * bump(0.5 * (a + b)) + bump(b));
        }
        const double z = value[K];
        for (int i = 0; i <= K; ++i) {
            value[i] /= z;
            deriv[i] = bump(i * h) / z;
        }
    }

    double eval(double x) const {
        if (x <= 0.0) return 0.0;
        if (x >= 1.0) return 1.0;
        const double h = 1.0 / K;
        int i = std::min(static_cast<int>(x * K), K - 1);
        double t = (x - i * h) / h;
        double y0 = value[i], y1 = value[i + 1];
        double d0 = deriv[i] * h, d1 = deriv[i + 1] * h;
        double t2 = t * t, t3 = t2 * t;
        return (2 * t3 - 3 * t2 + 1) * y0 + (t3 - 2 * t2 + t) * d0 +
               (-2 * t3 + 3 * t2) * y1 + (t3 - t2) * d1;
    }
};

const BumpTable& bump_table() {
    static BumpTable table;
    return table;
}

} // namespace

void BesovParams::validate() const {
    if (!(p >= 1.0) || !(r >= 1.0) || !(q >= 1.0))
        throw std::invalid_argument("BesovParams: p, r, q must be >= 1");
}

double DyadicPartition::theta(double r) const {
    if (r <= 0.75) return 1.0;
    if (r >= 4.0 / 3.0) return 0.0;
    return 1.0 - bump_table().eval((r - 0.75) * (12.0 / 7.0));
}

DyadicPartition::DyadicPartition(Grid grid, int jmin, int jmax)
    : grid_(grid), j_min_(jmin), j_max_(jmax) {
    const std::size_t n = grid_.size();
    phi_tab_ = std::make_shared<std::vector<std::vector<double>>>();
    theta_tab_ = std::make_shared<std::vector<std::vector<double>>>();
    std::vector<double> absk(n);
    for (std::size_t i = 0; i < n; ++i) absk[i] = grid_.abs_wavenumber(i);
    for (int j = j_min_; j <= j_max_; ++j) {
        std::vector<double> tab(n);
        const double scale = std::ldexp(1.0, -j);
        for (std::size_t i = 0; i < n; ++i) tab[i] = phi(scale * absk[i]);
        phi_tab_->push_back(std::move(tab));
    }
    for (int j = j_min_ - 2; j <= j_max_ + 2; ++j) {
        std::vector<double> tab(n);
        const double scale = std::ldexp(1.0, -j);
        for (std::size_t i = 0; i < n; ++i) tab[i] = theta(scale * absk[i]);
        theta_tab_->push_back(std::move(tab));
    }
}

DyadicPartition DyadicPartition::build(const Grid& grid, int margin) {
    if (margin < 0)
        throw std::invalid_argument("DyadicPartition::build: margin must be >= 0");
    int j_max = static_cast<int>(std::ceil(std::log2(grid.nyquist()))) + 1;
    int j_min = -margin;
    if (j_max - j_min + 1 < 3)
        throw std::invalid_argument(
            "DyadicPartition::build: resolution too small to host 3 dyadic shells");
    return DyadicPartition(grid, j_min, j_max);
}

const std::vector<double>& DyadicPartition::phi_table(int j) const {
    if (j < j_min_ || j > j_max_)
        throw std::invalid_argument("DyadicPartition: block index out of range");
    return (*phi_tab_)[static_cast<std::size_t>(j - j_min_)];
}

const std::vector<double>& DyadicPartition::theta_table(int j) const {
    if (j < j_min_ - 2 || j > j_max_ + 2)
        throw std::invalid_argument("DyadicPartition: low-pass index out of range");
    return (*theta_tab_)[static_cast<std::size_t>(j - (j_min_ - 2))];
}

Field DyadicPartition::block(const Field& f, int j) const {
    require_same_grid(grid_, f.grid(), "DyadicPartition::block");
    const auto& tab = phi_table(j);
    auto spec = f.spectral();
    for (std::size_t i = 0; i < spec.size(); ++i) spec[i] *= tab[i];
    return Field::from_spectral(grid_, std::move(spec));
}

Field DyadicPartition::low_pass(const Field& f, int j) const {
    require_same_grid(grid_, f.grid(), "DyadicPartition::low_pass");
    const auto& tab = theta_table(j);
    auto spec = f.spectral();
    for (std::size_t i = 0; i < spec.size(); ++i) spec[i] *= tab[i];
    return Field::from_spectral(grid_, std::move(spec));
}

std::vector<double> DyadicPartition::block_norms(const Field& f, double p) const {
    std::vector<double> out;
    out.reserve(blocks());
    for (int j = j_min_; j <= j_max_; ++j) out.push_back(lp_norm(block(f, j), p));
    return out;
}

std::vector<double> DyadicPartition::block_norms(const VectorField& f, double p) const {
    std::vector<double> out;
    out.reserve(blocks());
    for (int j = j_min_; j <= j_max_; ++j) {
        VectorField b;
        for (const auto& c : f.comp) b.comp.push_back(block(c, j));
        out.push_back(lp_norm(b, p));
    }
    return out;
}

double besov_from_blocks(const std::vector<double>& blocks, int j_min,
                         double s, double r) {
    if (std::isinf(r)) {
        double mx = 0.0;
        for (std::size_t i = 0; i < blocks.size(); ++i)
            mx = std::max(mx, std::pow(2.0, s * (j_min + double(i))) * blocks[i]);
        return mx;
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < blocks.size(); ++i)
        acc += std::pow(std::pow(2.0, s * (j_min + double(i))) * blocks[i], r);
    return std::pow(acc, 1.0 / r);
}

double besov_norm(const Field& f, const BesovParams& bp, const DyadicPartition& part) {
    bp.validate();
    return besov_from_blocks(part.block_norms(f, bp.p), part.j_min(), bp.s, bp.r);
}

double besov_norm(const VectorField& f, const BesovParams& bp, const DyadicPartition& part) {
    bp.validate();
    return besov_from_blocks(part.block_norms(f, bp.p), part.j_min(), bp.s, bp.r);
}

void NormSeries::append(double t, std::vector<double> block_norms) {
    if (!times.empty() && t <= times.back())
        throw std::invalid_argument("NormSeries::append: times must be strictly increasing");
    if (!blocks.empty() && block_norms.size() != blocks.front().size())
        throw std::invalid_argument("NormSeries::append: block count mismatch");
    times.push_back(t);
    blocks.push_back(std::move(block_norms));
}

void NormSeries::validate() const {
    if (times.empty())
        throw std::invalid_argument("NormSeries: empty series");
    for (std::size_t i = 1; i < times.size(); ++i)
        if (times[i] <= times[i - 1])
            throw std::invalid_argument("NormSeries: times must be strictly increasing");
    for (const auto& row : blocks) {
        if (row.size() != static_cast<std::size_t>(j_max - j_min + 1))
            throw std::invalid_argument("NormSeries: row size mismatch");
        for (double v : row)
            if (!(v >= 0.0))
                throw std::invalid_argument("NormSeries: negative block norm");
    }
}

std::vector<double> NormSeries::time_block_norms(double q) const {
    return time_block_norms(q, times.size() - 1);
}

std::vector<double> NormSeries::time_block_norms(double q, std::size_t upto) const {
    validate();
    if (upto >= times.size())
        throw std::invalid_argument("NormSeries: prefix index out of range");
    const std::size_t nb = blocks.front().size();
    std::vector<double> out(nb, 0.0);
    for (std::size_t k = 0; k < nb; ++k) {
        if (std::isinf(q)) {
            double mx = 0.0;
            for (std::size_t i = 0; i <= upto; ++i) mx = std::max(mx, blocks[i][k]);
            out[k] = mx;
        } else {
            double acc = 0.0;
            for (std::size_t i = 1; i <= upto; ++i) {
                double dt = times[i] - times[i - 1];
                acc += 0.5 * dt * (std::pow(blocks[i - 1][k], q) + std::pow(blocks[i][k], q));
            }
            out[k] = std::pow(acc, 1.0 / q);
        }
    }
    return out;
}

NormSeries record_series(const Field& f, const BesovParams& bp,
                         const DyadicPartition& part) {
    NormSeries s;
    s.j_min = part.j_min();
    s.j_max = part.j_max();
    s.params = bp;
    s.append(0.0, part.block_norms(f, bp.p));
    return s;
}

double chemin_lerner_norm(const NormSeries& series) {
    return chemin_lerner_norm(series, series.params);
}

double chemin_lerner_norm(const NormSeries& series, const BesovParams& bp) {
    bp.validate();
    auto tb = series.time_block_norms(bp.q);
    return besov_from_blocks(tb, series.j_min, bp.s, bp.r);
}

double bernstein_ratio(const Field& f, const std::array<int, 3>& gamma,
                       double p, double q, int j) {
    double base = lp_norm(f, p);
    if (base == 0.0)
        throw std::invalid_argument("bernstein_ratio: ||f||_p vanishes");
    int order = gamma[0] + gamma[1] + gamma[2];
    double num = lp_norm(f.derivative(gamma), q);
    double expo = j * order + j * f.grid().dim() * (1.0 / p - 1.0 / q);
    return num / (std::pow(2.0, expo) * base);
}

namespace {
void enumerate_multi(int dim, int order, std::array<int, 3> cur, int axis,
                     std::vector<std::array<int, 3>>& out) {
    if (axis == dim - 1) {
        cur[axis] = order;
        out.push_back(cur);
        return;
    }
    for (int g = 0; g <= order; ++g) {
        cur[axis] = g;
        enumerate_multi(dim, order - g, cur, axis + 1, out);
    }
}
} // namespace

double reverse_bernstein_ratio(const Field& f, int order, double p, int j) {
    double base = lp_norm(f, p);
    if (base == 0.0)
        throw std::invalid_argument("reverse_bernstein_ratio: ||f||_p vanishes");
    std::vector<std::array<int, 3>> multis;
    enumerate_multi(f.grid().dim(), order, {0, 0, 0}, 0, multis);
    double sup = 0.0;
    for (const auto& g : multis) sup = std::max(sup, lp_norm(f.derivative(g), p));
    if (sup == 0.0)
        throw std::invalid_argument("reverse_bernstein_ratio: derivative sup vanishes");
    return base / (std::pow(2.0, -double(j) * order) * sup);
}

} // namespace besovlab
