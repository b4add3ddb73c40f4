#include "klein/kernels.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace klein::kernels {

namespace {

ElementId lookup(const ElementIndex& index, const IntMat6& m) {
  auto it = index.find(m);
  return it == index.end() ? -1 : it->second;
}

}  // namespace

std::vector<ElementId> cayley_table(std::span<const IntMat6> elems, const ElementIndex& index) {
  const auto n = static_cast<std::ptrdiff_t>(elems.size());
  std::vector<ElementId> table(elems.size() * elems.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    for (std::ptrdiff_t j = 0; j < n; ++j) table[static_cast<std::size_t>(i * n + j)] = lookup(index, elems[i] * elems[j]);
  return table;
}

std::vector<ElementId> cayley_table_serial(std::span<const IntMat6> elems, const ElementIndex& index) {
  std::vector<ElementId> table;
  table.reserve(elems.size() * elems.size());
  for (const auto& a : elems)
    for (const auto& b : elems) table.push_back(lookup(index, a * b));
  return table;
}

ElementSet stabilizer_mask(std::span<const IntMat6> elems, const ElementSet& candidates, const TorusPoint& u) {
  const auto n = static_cast<std::ptrdiff_t>(elems.size());
  std::vector<unsigned char> hit(elems.size(), 0);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < n; ++k)
    if (candidates.test(static_cast<std::size_t>(k))) hit[static_cast<std::size_t>(k)] = u.fixed_by(elems[k]) ? 1 : 0;
  ElementSet out;
  for (std::size_t k = 0; k < elems.size(); ++k)
    if (hit[k]) out.set(k);
  return out;
}

ElementSet stabilizer_mask_serial(std::span<const IntMat6> elems, const ElementSet& candidates, const TorusPoint& u) {
  ElementSet out;
  for (std::size_t k = 0; k < elems.size(); ++k)
    if (candidates.test(k) && u.apply(elems[k]) == u) out.set(k);
  return out;
}

std::vector<int> orbit_partition(std::span<const IntMat6> elems, const ElementSet& acting,
                                 std::span<const TorusPoint> points) {
  // Each point's orbit is keyed by its smallest image; keys are independent per point.
  const auto n = static_cast<std::ptrdiff_t>(points.size());
  std::vector<TorusPoint> key(points.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    TorusPoint best = points[i];
    for (std::size_t k = 0; k < elems.size(); ++k) {
      if (!acting.test(k)) continue;
      TorusPoint img = points[i].apply(elems[k]);
      if (img < best) best = img;
    }
    key[static_cast<std::size_t>(i)] = best;
  }
  std::map<TorusPoint, int> number;
  std::vector<int> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto [it, inserted] = number.emplace(key[i], static_cast<int>(number.size()));
    out[i] = it->second;
  }
  return out;
}

std::vector<int> orbit_partition_serial(std::span<const IntMat6> elems, const ElementSet& acting,
                                        std::span<const TorusPoint> points) {
  std::map<TorusPoint, std::size_t> where;
  for (std::size_t i = 0; i < points.size(); ++i) where.emplace(points[i], i);
  std::vector<int> out(points.size(), -1);
  int next = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (out[i] != -1) continue;
    std::vector<std::size_t> frontier{i};
    out[i] = next;
    while (!frontier.empty()) {
      std::size_t p = frontier.back();
      frontier.pop_back();
      for (std::size_t k = 0; k < elems.size(); ++k) {
        if (!acting.test(k)) continue;
        auto it = where.find(points[p].apply(elems[k]));
        if (it == where.end()) throw std::invalid_argument("orbit_partition: point set is not closed under the action");
        if (out[it->second] == -1) {
          out[it->second] = next;
          frontier.push_back(it->second);
        }
      }
    }
    ++next;
  }
  return out;
}

}  // namespace klein::kernels
