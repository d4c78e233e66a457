#include "ils/freq.hpp"

#include <numeric>
#include <string>

namespace ils {

std::vector<std::string> validate_outline_array(const OutlineArray& o, const Freq& f) {
  const int u = static_cast<int>(f.size());
  if (o.k != u) throw std::invalid_argument("outline array and frequency array orders differ");
  std::vector<std::string> bad;
  for (int i = 0; i < u; ++i)
    for (int j = 0; j < u; ++j) {
      long long s = 0;
      for (int l = 0; l < u; ++l) {
        if (o.at(i, j, l) < 0)
          bad.push_back("negative at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        s += o.at(i, j, l);
      }
      if (s != f[i][j])
        bad.push_back("size (" + std::to_string(i) + "," + std::to_string(j) + "): " +
                      std::to_string(s) + " != " + std::to_string(f[i][j]));
    }
  for (int i = 0; i < u; ++i)
    for (int l = 0; l < u; ++l) {
      long long s = 0;
      for (int j = 0; j < u; ++j) s += o.at(i, j, l);
      if (s != f[i][l])
        bad.push_back("row " + std::to_string(i) + " symbol " + std::to_string(l) + ": " +
                      std::to_string(s) + " != " + std::to_string(f[i][l]));
    }
  for (int j = 0; j < u; ++j)
    for (int l = 0; l < u; ++l) {
      long long s = 0;
      for (int i = 0; i < u; ++i) s += o.at(i, j, l);
      if (s != f[l][j])
        bad.push_back("col " + std::to_string(j) + " symbol " + std::to_string(l) + ": " +
                      std::to_string(s) + " != " + std::to_string(f[l][j]));
    }
  return bad;
}

OutlineArray sum_outline_arrays(const OutlineArray& a, const OutlineArray& b) {
  if (a.k != b.k) throw std::invalid_argument("outline array orders differ");
  OutlineArray out(a.k);
  for (size_t i = 0; i < out.c.size(); ++i) out.c[i] = a.c[i] + b.c[i];
  return out;
}

OutlineArray amalgamate_maps(const OutlineArray& o, const std::vector<int>& row_map,
                             const std::vector<int>& col_map, const std::vector<int>& sym_map,
                             int new_order) {
  OutlineArray out(new_order);
  for (int i = 0; i < o.k; ++i)
    for (int j = 0; j < o.k; ++j)
      for (int l = 0; l < o.k; ++l)
        out.at(row_map[i], col_map[j], sym_map[l]) += o.at(i, j, l);
  return out;
}

OutlineArray amalgamate(const OutlineArray& o, const std::vector<std::vector<int>>& groups) {
  std::vector<int> map(o.k, -1);
  for (size_t g = 0; g < groups.size(); ++g)
    for (int x : groups[g]) {
      if (x < 0 || x >= o.k || map[x] >= 0)
        throw std::invalid_argument("groups do not partition the index set");
      map[x] = static_cast<int>(g);
    }
  for (int x = 0; x < o.k; ++x)
    if (map[x] < 0) throw std::invalid_argument("groups do not cover the index set");
  return amalgamate_maps(o, map, map, map, static_cast<int>(groups.size()));
}

Freq product_freq(const Parts& P) {
  const int u = static_cast<int>(P.size());
  Freq f(u, std::vector<int>(u, 0));
  for (int i = 0; i < u; ++i)
    for (int j = 0; j < u; ++j) f[i][j] = P[i] * P[j];
  return f;
}

OutlineArray outline_square_as_array(const Outline& o) {
  if (o.P != o.Q || o.P != o.R)
    throw std::invalid_argument("conversion requires P = Q = R");
  OutlineArray out(o.u());
  out.c.assign(o.counts.begin(), o.counts.end());
  return out;
}

Outline array_as_outline_square(const OutlineArray& o, const Parts& P) {
  if (static_cast<int>(P.size()) != o.k)
    throw std::invalid_argument("partition length differs from array order");
  for (int i = 0; i < o.k; ++i)
    for (int j = 0; j < o.k; ++j) {
      long long s = 0;
      for (int l = 0; l < o.k; ++l) s += o.at(i, j, l);
      if (s != static_cast<long long>(P[i]) * P[j])
        throw std::invalid_argument("cell (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") size differs from part product");
    }
  Outline out(P, P, P);
  out.counts.assign(o.c.begin(), o.c.end());
  return out;
}

}  // namespace ils
