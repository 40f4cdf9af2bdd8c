#include "dmlpg/assembly/weak_form.hpp"

#include "dmlpg/elasticity/material.hpp"

namespace dmlpg {

Matrix weak_form_lambda(const Subdomain& sd, const SubdomainRules& rules, const TestFunction& v, const Matrix& D,
                        const PolyBasis& basis)
{
    const int d = sd.dim;
    const int q = basis.size();
    Matrix lambda = Matrix::Zero(d, d * q);
    Vector values;
    Matrix grads;

    if (v.kind != TestKind::unit) {
        const auto& rule = rules.interior;
        for (std::size_t g = 0; g < rule.size(); ++g) {
            const Point& y = rule.points[g];
            const Matrix evd = test_strain(v.gradient(y).head(d), d) * D;
            basis.eval_gradient_local(y, values, grads);
            for (int n = 1; n < q; ++n) lambda.middleCols(n * d, d) -= rule.weights[g] * evd * strain_basis(n, grads);
        }
    }

    for (std::size_t p = 0; p < sd.pieces.size(); ++p) {
        const auto& piece = sd.pieces[p];
        if (v.vanishes_on(piece)) continue;
        bool any_unknown = false;
        for (int i = 0; i < d; ++i) any_unknown |= !piece.traction_known(i);
        if (!any_unknown) continue;
        const auto& rule = rules.pieces[p];
        for (std::size_t g = 0; g < rule.size(); ++g) {
            const Point& y = rule.points[g];
            const double wv = rule.weights[g] * v.value(y);
            if (wv == 0.0) continue;
            Matrix nd = normal_matrix(rule.normals[g], d) * D;
            for (int i = 0; i < d; ++i)
                if (piece.traction_known(i)) nd.row(i).setZero();
            basis.eval_gradient_local(y, values, grads);
            for (int n = 1; n < q; ++n) lambda.middleCols(n * d, d) += wv * nd * strain_basis(n, grads);
        }
    }
    return lambda;
}

Vector weak_form_rhs(const Subdomain& sd, const SubdomainRules& rules, const TestFunction& v, const Matrix& D,
                     const BoundaryData& data)
{
    (void)D;
    const int d = sd.dim;
    Vector beta = Vector::Zero(d);
    if (data.body_force) {
        const auto& rule = rules.interior;
        for (std::size_t g = 0; g < rule.size(); ++g) {
            const Point& y = rule.points[g];
            beta -= rule.weights[g] * v.value(y) * data.body_force(sd.center + y).head(d);
        }
    }
    for (std::size_t p = 0; p < sd.pieces.size(); ++p) {
        const auto& piece = sd.pieces[p];
        if (!piece.on_boundary() || v.vanishes_on(piece)) continue;
        bool any_known = false;
        for (int i = 0; i < d; ++i) any_known |= piece.traction_known(i);
        if (!any_known) continue;
        if (!data.stress) throw Error("weak form: traction data required on the boundary");
        const auto& rule = rules.pieces[p];
        for (std::size_t g = 0; g < rule.size(); ++g) {
            const Point& y = rule.points[g];
            const double wv = rule.weights[g] * v.value(y);
            if (wv == 0.0) continue;
            const Vector t = normal_matrix(rule.normals[g], d) * data.stress(sd.center + y);
            for (int i = 0; i < d; ++i)
                if (piece.traction_known(i)) beta[i] -= wv * t[i];
        }
    }
    return beta;
}

Vector weak_form_apply(const Subdomain& sd, const SubdomainRules& rules, const TestFunction& v, const Matrix& D,
                       const std::function<Vector(const Point&)>& strain_local)
{
    const int d = sd.dim;
    Vector out = Vector::Zero(d);
    if (v.kind != TestKind::unit) {
        const auto& rule = rules.interior;
        for (std::size_t g = 0; g < rule.size(); ++g) {
            const Point& y = rule.points[g];
            out -= rule.weights[g] * test_strain(v.gradient(y).head(d), d) * D * strain_local(y);
        }
    }
    for (std::size_t p = 0; p < sd.pieces.size(); ++p) {
        const auto& piece = sd.pieces[p];
        if (v.vanishes_on(piece)) continue;
        const auto& rule = rules.pieces[p];
        for (std::size_t g = 0; g < rule.size(); ++g) {
            const Point& y = rule.points[g];
            const Vector t = rule.weights[g] * v.value(y) * (normal_matrix(rule.normals[g], d) * D * strain_local(y));
            for (int i = 0; i < d; ++i)
                if (!piece.traction_known(i)) out[i] += t[i];
        }
    }
    return out;
}

std::shared_ptr<const Matrix> LambdaCache::find(const std::string& key)
{
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = entries_.find(key);
    if (it == entries_.end()) return nullptr;
    ++it->second.hits;
    return it->second.value;
}

std::shared_ptr<const Matrix> LambdaCache::insert(const std::string& key, Matrix value)
{
    auto ptr = std::make_shared<const Matrix>(std::move(value));
    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, inserted] = entries_.try_emplace(key, Entry{ptr, 0});
    // a concurrent miss on the same key already inserted an identical matrix;
    // count this one as a hit so totals match the serial run
    if (!inserted) ++it->second.hits;
    return it->second.value;
}

std::size_t LambdaCache::entries() const
{
    std::lock_guard<std::mutex> lock(mutex_);
    return entries_.size();
}

std::size_t LambdaCache::total_hits() const
{
    std::lock_guard<std::mutex> lock(mutex_);
    std::size_t total = 0;
    for (const auto& [k, e] : entries_) total += e.hits;
    return total;
}

std::map<std::string, std::size_t> LambdaCache::hits() const
{
    std::lock_guard<std::mutex> lock(mutex_);
    std::map<std::string, std::size_t> out;
    for (const auto& [k, e] : entries_) out[k] = e.hits;
    return out;
}

void LambdaCache::clear()
{
    std::lock_guard<std::mutex> lock(mutex_);
    entries_.clear();
}

}  // namespace dmlpg
