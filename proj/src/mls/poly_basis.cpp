#include "dmlpg/mls/poly_basis.hpp"

#include <string>

namespace dmlpg {

int basis_size(int dim, int degree)
{
    long num = 1, den = 1;
    for (int i = 1; i <= dim; ++i) {
        num *= degree + i;
        den *= i;
    }
    return static_cast<int>(num / den);
}

std::vector<MultiIndex> graded_exponents(int dim, int degree)
{
    std::vector<MultiIndex> out;
    for (int k = 0; k <= degree; ++k) {
        if (dim == 2) {
            for (int a = k; a >= 0; --a) out.push_back({a, k - a, 0});
        } else {
            for (int a = k; a >= 0; --a)
                for (int b = k - a; b >= 0; --b) out.push_back({a, b, k - a - b});
        }
    }
    return out;
}

PolyBasis::PolyBasis(int dim, int degree, const Point& center, double scale)
    : dim_(dim), degree_(degree), center_(center), scale_(scale), exponents_(graded_exponents(dim, degree))
{
    if (dim != 2 && dim != 3) throw Error("polynomial basis: dim must be 2 or 3");
    if (degree < 0) throw Error("polynomial basis: negative degree");
    if (!(scale > 0)) throw Error("polynomial basis: scale must be positive");
}

Vector PolyBasis::eval(const Point& x, const MultiIndex& alpha) const { return eval_local(x - center_, alpha); }

namespace {

// t^e differentiated `a` times: e!/(e-a)! t^(e-a)
double falling_power(double t, int e, int a)
{
    if (a > e) return 0.0;
    double coef = 1.0;
    for (int i = 0; i < a; ++i) coef *= e - i;
    double p = 1.0;
    for (int i = 0; i < e - a; ++i) p *= t;
    return coef * p;
}

}  // namespace

Vector PolyBasis::eval_local(const Point& offset, const MultiIndex& alpha) const
{
    const int total = order(alpha);
    if (total > degree_)
        throw Error("polynomial basis: derivative order " + std::to_string(total) + " exceeds degree " +
                    std::to_string(degree_));
    if (dim_ == 2 && alpha[2] != 0) throw Error("polynomial basis: z-derivative requested in 2D");
    const Point t = offset / scale_;
    double factor = 1.0;
    for (int i = 0; i < total; ++i) factor /= scale_;
    Vector out(size());
    for (int n = 0; n < size(); ++n) {
        const auto& e = exponents_[n];
        double v = factor;
        for (int c = 0; c < dim_ && v != 0.0; ++c) v *= falling_power(t[c], e[c], alpha[c]);
        out[n] = v;
    }
    return out;
}

void PolyBasis::eval_gradient_local(const Point& offset, Vector& values, Matrix& gradient) const
{
    const Point t = offset / scale_;
    double pw[3][8];
    for (int c = 0; c < dim_; ++c) {
        pw[c][0] = 1.0;
        for (int k = 1; k <= degree_ && k < 8; ++k) pw[c][k] = pw[c][k - 1] * t[c];
    }
    const int q = size();
    values.resize(q);
    gradient.resize(dim_, q);
    for (int n = 0; n < q; ++n) {
        const auto& e = exponents_[n];
        double v = 1.0;
        for (int c = 0; c < dim_; ++c) v *= pw[c][e[c]];
        values[n] = v;
        for (int c = 0; c < dim_; ++c) {
            if (e[c] == 0) {
                gradient(c, n) = 0.0;
                continue;
            }
            double g = e[c] * pw[c][e[c] - 1] / scale_;
            for (int o = 0; o < dim_; ++o)
                if (o != c) g *= pw[o][e[o]];
            gradient(c, n) = g;
        }
    }
}

}  // namespace dmlpg
