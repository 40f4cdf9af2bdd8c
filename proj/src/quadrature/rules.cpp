#include "dmlpg/quadrature/rules.hpp"

#include "dmlpg/quadrature/gauss_legendre.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <numeric>

namespace dmlpg {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

Point polar(double t) { return Point(std::cos(t), std::sin(t), 0.0); }

void push(QuadratureRule& rule, const Point& p, double w)
{
    rule.points.push_back(p);
    rule.weights.push_back(w);
}

void push(QuadratureRule& rule, const Point& p, double w, const Point& n)
{
    rule.points.push_back(p);
    rule.weights.push_back(w);
    rule.normals.push_back(n);
}

/// Angular rule on [t0, t1]. A full turn uses the periodic trapezoid rule, exact for
/// trigonometric polynomials of degree < n; partial arcs use Gauss-Legendre.
GaussRule1d angular_rule(int n, double t0, double t1)
{
    if (std::abs((t1 - t0) - two_pi) > 1e-12) return gauss_legendre_interval(n, t0, t1);
    GaussRule1d r;
    const double step = (t1 - t0) / n;
    for (int i = 0; i < n; ++i) {
        r.points.push_back(t0 + (i + 0.5) * step);
        r.weights.push_back(step);
    }
    return r;
}

/// Points on the unit sphere patch with weights dc dphi.
template <class F>
void sphere_patch(double t0, double t1, double c0, double c1, int n, F&& f)
{
    const auto gp = angular_rule(n, t0, t1);
    const auto gc = gauss_legendre_interval(n, c0, c1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double c = gc.points[j], s = std::sqrt(std::max(0.0, 1.0 - c * c));
            const Point e(s * std::cos(gp.points[i]), s * std::sin(gp.points[i]), c);
            f(e, gp.weights[i] * gc.weights[j]);
        }
    }
}

}  // namespace

double QuadratureRule::sum() const { return std::accumulate(weights.begin(), weights.end(), 0.0); }

void QuadratureRule::append(const QuadratureRule& other)
{
    points.insert(points.end(), other.points.begin(), other.points.end());
    weights.insert(weights.end(), other.weights.begin(), other.weights.end());
    normals.insert(normals.end(), other.normals.begin(), other.normals.end());
    exactness = std::min(exactness, other.exactness);
}

QuadratureRule QuadratureRule::translated(const Point& offset) const
{
    QuadratureRule out = *this;
    for (auto& p : out.points) p += offset;
    return out;
}

QuadratureRule rule_box(int dim, const Point& lo, const Point& hi, int n)
{
    QuadratureRule rule;
    rule.exactness = 2 * n - 1;
    std::array<GaussRule1d, 3> g;
    for (int a = 0; a < dim; ++a) g[a] = gauss_legendre_interval(n, lo[a], hi[a]);
    const int nz = dim == 3 ? n : 1;
    rule.points.reserve(std::size_t(n) * n * nz);
    for (int k = 0; k < nz; ++k)
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) {
                Point p(g[0].points[i], g[1].points[j], dim == 3 ? g[2].points[k] : 0.0);
                double w = g[0].weights[i] * g[1].weights[j] * (dim == 3 ? g[2].weights[k] : 1.0);
                push(rule, p, w);
            }
    return rule;
}

QuadratureRule rule_disk_or_ball(int dim, const Point& center, double radius, int n_radial, int n_angular)
{
    if (!(radius > 0)) throw Error("disk/ball rule: radius must be positive");
    QuadratureRule rule;
    const auto gr = gauss_legendre_interval(n_radial, 0.0, radius);
    if (dim == 2) {
        const auto gt = angular_rule(n_angular, 0.0, two_pi);
        for (int j = 0; j < n_angular; ++j)
            for (int i = 0; i < n_radial; ++i)
                push(rule, center + gr.points[i] * polar(gt.points[j]), gr.weights[i] * gr.points[i] * gt.weights[j]);
    } else {
        sphere_patch(0.0, two_pi, -1.0, 1.0, n_angular, [&](const Point& e, double w) {
            for (int i = 0; i < n_radial; ++i)
                push(rule, center + gr.points[i] * e, w * gr.weights[i] * gr.points[i] * gr.points[i]);
        });
    }
    return rule;
}

QuadratureRule rule_clipped(const Subdomain& sd, const QuadratureCounts& counts)
{
    if (sd.shape == SubdomainShape::box) return rule_box(sd.dim, sd.lo, sd.hi, counts.box);
    const int n = counts.curved;
    const double R = sd.size;
    QuadratureRule rule;
    if (sd.dim == 2) {
        for (const auto& s : sd.sectors) {
            const auto gt = angular_rule(n, s.t0, s.t1);
            for (int j = 0; j < n; ++j) {
                const double t = gt.points[j];
                const auto gr = gauss_legendre_interval(n, sd.inner_radius(t), R);
                for (int i = 0; i < n; ++i)
                    push(rule, gr.points[i] * polar(t), gr.weights[i] * gr.points[i] * gt.weights[j]);
            }
        }
        return rule;
    }
    const auto gr = gauss_legendre_interval(n, 0.0, R);
    sphere_patch(sd.theta0, sd.theta1, sd.cos_lo, sd.cos_hi, n, [&](const Point& e, double w) {
        for (int i = 0; i < n; ++i) push(rule, gr.points[i] * e, w * gr.weights[i] * gr.points[i] * gr.points[i]);
    });
    return rule;
}

QuadratureRule rule_piece(const Subdomain& sd, const BoundaryPiece& piece, const QuadratureCounts& counts)
{
    QuadratureRule rule;
    const int n = counts.curved;
    switch (piece.kind) {
    case PieceKind::box_face: {
        const int nb = counts.box;
        rule.exactness = 2 * nb - 1;
        int other[2] = {-1, -1}, k = 0;
        for (int a = 0; a < sd.dim; ++a)
            if (a != piece.axis) other[k++] = a;
        const auto g0 = gauss_legendre_interval(nb, piece.lo[other[0]], piece.hi[other[0]]);
        if (sd.dim == 2) {
            for (int i = 0; i < nb; ++i) {
                Point p = Point::Zero();
                p[piece.axis] = piece.position;
                p[other[0]] = g0.points[i];
                push(rule, p, g0.weights[i], piece.normal);
            }
        } else {
            const auto g1 = gauss_legendre_interval(nb, piece.lo[other[1]], piece.hi[other[1]]);
            for (int j = 0; j < nb; ++j)
                for (int i = 0; i < nb; ++i) {
                    Point p = Point::Zero();
                    p[piece.axis] = piece.position;
                    p[other[0]] = g0.points[i];
                    p[other[1]] = g1.points[j];
                    push(rule, p, g0.weights[i] * g1.weights[j], piece.normal);
                }
        }
        break;
    }
    case PieceKind::arc: {
        const auto gt = angular_rule(n, piece.t0, piece.t1);
        for (int i = 0; i < n; ++i) {
            const Point e = polar(gt.points[i]);
            push(rule, piece.radius * e, piece.radius * gt.weights[i], e);
        }
        break;
    }
    case PieceKind::hole_arc: {
        const auto gt = angular_rule(n, piece.t0, piece.t1);
        const Point o = sd.hole_offset;
        for (int i = 0; i < n; ++i) {
            const Point e = polar(gt.points[i]);
            const Point p = 2.0 * o.dot(e) * e;
            push(rule, p, 2.0 * piece.radius * gt.weights[i], (o - p) / piece.radius);
        }
        break;
    }
    case PieceKind::segment: {
        const auto gr = gauss_legendre_interval(n, piece.rho_lo0, piece.radius);
        const Point e = polar(piece.t0);
        rule.exactness = 2 * n - 1;
        for (int i = 0; i < n; ++i) push(rule, gr.points[i] * e, gr.weights[i], piece.normal);
        break;
    }
    case PieceKind::sphere_patch: {
        const double R = piece.radius;
        sphere_patch(piece.t0, piece.t1, piece.c0, piece.c1, n,
                     [&](const Point& e, double w) { push(rule, R * e, R * R * w, e); });
        break;
    }
    case PieceKind::flat_sector: {
        const auto gt = angular_rule(n, piece.t0, piece.t1);
        const auto gr = gauss_legendre_interval(n, 0.0, piece.radius);
        for (int j = 0; j < n; ++j) {
            const Point e = std::cos(gt.points[j]) * piece.u + std::sin(gt.points[j]) * piece.w;
            for (int i = 0; i < n; ++i)
                push(rule, gr.points[i] * e, gr.weights[i] * gr.points[i] * gt.weights[j], piece.normal);
        }
        break;
    }
    default:
        throw Error("boundary rule: unsupported piece type");
    }
    return rule;
}

QuadratureRule rule_boundary(const Subdomain& sd, const std::vector<int>& selector, const QuadratureCounts& counts)
{
    QuadratureRule rule;
    rule.exactness = 1 << 20;
    std::vector<int> which = selector;
    if (which.empty()) {
        which.resize(sd.pieces.size());
        std::iota(which.begin(), which.end(), 0);
    }
    for (int i : which) {
        if (i < 0 || i >= static_cast<int>(sd.pieces.size())) throw Error("boundary rule: piece index out of range");
        rule.append(rule_piece(sd, sd.pieces[i], counts));
    }
    if (rule.exactness == (1 << 20)) rule.exactness = -1;
    return rule;
}

SubdomainRules build_rules(const Subdomain& sd, const QuadratureCounts& counts)
{
    SubdomainRules r;
    r.interior = rule_clipped(sd, counts);
    for (const auto& p : sd.pieces) r.pieces.push_back(rule_piece(sd, p, counts));
    return r;
}

std::shared_ptr<const SubdomainRules> RuleCache::get(const Subdomain& sd, const QuadratureCounts& counts)
{
    const std::string key = sd.signature() + " #" + std::to_string(counts.box) + "," + std::to_string(counts.curved);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = rules_.find(key);
        if (it != rules_.end()) return it->second;
    }
    auto built = std::make_shared<const SubdomainRules>(build_rules(sd, counts));
    std::lock_guard<std::mutex> lock(mutex_);
    return rules_.emplace(key, std::move(built)).first->second;
}

std::size_t RuleCache::size() const
{
    std::lock_guard<std::mutex> lock(mutex_);
    return rules_.size();
}

}  // namespace dmlpg
