#include "genk/exterior.hpp"

namespace genk {

std::vector<int> mask_indices(Mask I) {
  std::vector<int> out;
  for (int i = 1; I >> (i - 1); ++i)
    if (I & index_mask(i)) out.push_back(i);
  return out;
}

Mask indices_mask(const std::vector<int>& indices, int m) {
  Mask I = 0;
  for (int i : indices) {
    if (i < 1 || i > m) throw InvalidInput("form index " + std::to_string(i) + " outside 1.." + std::to_string(m));
    if (I & index_mask(i)) throw InvalidInput("repeated form index " + std::to_string(i));
    I |= index_mask(i);
  }
  return I;
}

std::string mask_label(Mask I) {
  if (I == 0) return "1";
  std::string s = "dx";
  for (int i : mask_indices(I)) s += std::to_string(i);
  return s;
}

MatX<double> degree_selector(int m, std::initializer_list<int> degrees) {
  const Mask n = Mask(1) << m;
  MatX<double> D = MatX<double>::Zero(n, n);
  for (Mask I = 0; I < n; ++I)
    for (int k : degrees)
      if (degree(I) == k) D(I, I) = 1.0;
  return D;
}

MatX<double> parity_selector(int m, int parity) {
  const Mask n = Mask(1) << m;
  MatX<double> D = MatX<double>::Zero(n, n);
  for (Mask I = 0; I < n; ++I)
    if ((degree(I) & 1) == parity) D(I, I) = 1.0;
  return D;
}

}  // namespace genk
