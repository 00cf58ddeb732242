#include "core/matrix.hpp"

#include <json.hpp>

#include <stdexcept>

namespace exalg {

namespace {
const Rational kZero{};
}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("ExactMatrix: empty dimensions");
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Rational(1));
    return m;
}

const Rational& ExactMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("ExactMatrix::at");
    auto it = entries_.find({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
    return it == entries_.end() ? kZero : it->second;
}

void ExactMatrix::set(std::size_t i, std::size_t j, Rational value) {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("ExactMatrix::set");
    Key k{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)};
    if (value.is_zero())
        entries_.erase(k);
    else
        entries_[k] = std::move(value);
}

void ExactMatrix::add(std::size_t i, std::size_t j, const Rational& value) {
    set(i, j, at(i, j) + value);
}

std::vector<Rational> ExactMatrix::row_dense(std::size_t i) const {
    std::vector<Rational> out(cols_);
    auto lo = entries_.lower_bound({static_cast<std::uint32_t>(i), 0});
    for (auto it = lo; it != entries_.end() && it->first.first == i; ++it)
        out[it->first.second] = it->second;
    return out;
}

std::vector<Rational> ExactMatrix::apply(const std::vector<Rational>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("ExactMatrix::apply: size mismatch");
    std::vector<Rational> out(rows_);
    for (const auto& [k, v] : entries_) out[k.first] += v * x[k.second];
    return out;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix out(cols_, rows_);
    for (const auto& [k, v] : entries_) out.set(k.second, k.first, v);
    return out;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("ExactMatrix: size mismatch in product");
    ExactMatrix out(a.rows(), b.cols());
    for (const auto& [ka, va] : a.entries_)
        for (const auto& [kb, vb] : b.entries_)
            if (ka.second == kb.first) out.add(ka.first, kb.second, va * vb);
    return out;
}

std::string ExactMatrix::to_json() const {
    nlohmann::ordered_json j;
    j["rows"] = rows_;
    j["cols"] = cols_;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [k, v] : entries_)
        arr.push_back({k.first, k.second, v.to_pair_string()});
    j["entries"] = std::move(arr);
    return j.dump();
}

ExactMatrix ExactMatrix::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    ExactMatrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
    for (const auto& e : j.at("entries"))
        m.set(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>(),
              Rational::parse(e.at(2).get<std::string>()));
    return m;
}

}  // namespace exalg
