#include "opt/harness/hyperparams.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace opt::harness {

namespace {
template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;
}  // namespace

HyperparamSpace::HyperparamSpace(std::vector<HyperparamDim> dims) : dims_(std::move(dims)) {
  std::set<std::string> names;
  for (const auto& d : dims_) {
    if (!names.insert(d.name).second) throw std::invalid_argument("hyperparam space: duplicate name " + d.name);
    std::visit(overloaded{
                   [&](const ContinuousDim& c) {
                     if (!(c.lo < c.hi)) throw std::invalid_argument("hyperparam " + d.name + ": lo >= hi");
                   },
                   [&](const IntegerDim& i) {
                     if (i.lo > i.hi) throw std::invalid_argument("hyperparam " + d.name + ": lo > hi");
                   },
                   [&](const CategoricalDim& k) {
                     if (k.choices.empty()) throw std::invalid_argument("hyperparam " + d.name + ": no choices");
                   },
               },
               d.kind);
  }
}

std::size_t HyperparamSpace::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < dims_.size(); ++i)
    if (dims_[i].name == name) return i;
  throw std::out_of_range("hyperparam space: no dimension named " + name);
}

SearchSpace HyperparamSpace::box() const {
  std::vector<double> lo, hi;
  for (const auto& d : dims_) {
    std::visit(overloaded{
                   [&](const ContinuousDim& c) {
                     lo.push_back(c.lo);
                     hi.push_back(c.hi);
                   },
                   [&](const IntegerDim& i) {
                     lo.push_back(static_cast<double>(i.lo) - 0.5);
                     hi.push_back(static_cast<double>(i.hi) + 0.5);
                   },
                   [&](const CategoricalDim& k) {
                     lo.push_back(0.0);
                     hi.push_back(static_cast<double>(k.choices.size()));
                   },
               },
               d.kind);
  }
  return SearchSpace(std::move(lo), std::move(hi));
}

std::vector<ParamValue> HyperparamSpace::decode(std::span<const double> x) const {
  if (x.size() != dims_.size()) throw std::invalid_argument("hyperparam decode: length mismatch");
  std::vector<ParamValue> out;
  out.reserve(x.size());
  for (std::size_t j = 0; j < dims_.size(); ++j) {
    const double v = std::isnan(x[j]) ? 0.0 : x[j];
    out.push_back(std::visit(overloaded{
                                 [&](const ContinuousDim& c) -> ParamValue { return std::clamp(v, c.lo, c.hi); },
                                 [&](const IntegerDim& i) -> ParamValue {
                                   const double r = std::clamp(std::floor(v + 0.5), static_cast<double>(i.lo),
                                                               static_cast<double>(i.hi));
                                   return static_cast<std::int64_t>(r);
                                 },
                                 [&](const CategoricalDim& k) -> ParamValue {
                                   const double last = static_cast<double>(k.choices.size() - 1);
                                   const auto idx = static_cast<std::size_t>(std::clamp(std::floor(v), 0.0, last));
                                   return k.choices[idx];
                                 },
                             },
                             dims_[j].kind));
  }
  return out;
}

std::vector<double> HyperparamSpace::encode(std::span<const ParamValue> values) const {
  if (values.size() != dims_.size()) throw std::invalid_argument("hyperparam encode: length mismatch");
  std::vector<double> out;
  out.reserve(values.size());
  for (std::size_t j = 0; j < dims_.size(); ++j) {
    const auto& name = dims_[j].name;
    out.push_back(std::visit(
        overloaded{
            [&](const ContinuousDim& c) {
              const auto* v = std::get_if<double>(&values[j]);
              if (!v || *v < c.lo || *v > c.hi) throw std::invalid_argument("hyperparam " + name + ": bad value");
              return *v;
            },
            [&](const IntegerDim& i) {
              const auto* v = std::get_if<std::int64_t>(&values[j]);
              if (!v || *v < i.lo || *v > i.hi) throw std::invalid_argument("hyperparam " + name + ": bad value");
              return static_cast<double>(*v);
            },
            [&](const CategoricalDim& k) {
              const auto* v = std::get_if<std::string>(&values[j]);
              auto it = v ? std::find(k.choices.begin(), k.choices.end(), *v) : k.choices.end();
              if (it == k.choices.end()) throw std::invalid_argument("hyperparam " + name + ": bad value");
              return static_cast<double>(it - k.choices.begin()) + 0.5;
            },
        },
        dims_[j].kind));
  }
  return out;
}

std::string to_string(const ParamValue& v) {
  return std::visit(overloaded{
                        [](double d) { return std::to_string(d); },
                        [](std::int64_t i) { return std::to_string(i); },
                        [](const std::string& s) { return s; },
                    },
                    v);
}

}  // namespace opt::harness
