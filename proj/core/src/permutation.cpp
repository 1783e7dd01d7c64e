#include "snakedimer/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "snakedimer/errors.hpp"

namespace snakedimer {

namespace {

std::string join(const std::vector<int>& values, const std::string& sep) {
  std::ostringstream out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out << sep;
    out << values[i];
  }
  return out.str();
}

}  // namespace

Permutation::Permutation(std::vector<int> one_line) : values_(std::move(one_line)) {
  if (values_.empty()) {
    throw ValidationError("permutation must have at least one entry");
  }
  const int n = static_cast<int>(values_.size());
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (int v : values_) {
    if (v < 1 || v > n) {
      throw ValidationError("permutation entry " + std::to_string(v) +
                            " out of range 1.." + std::to_string(n));
    }
    if (seen[static_cast<size_t>(v)]) {
      throw ValidationError("permutation repeats entry " + std::to_string(v));
    }
    seen[static_cast<size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw ValidationError("permutation size must be positive");
  std::vector<int> values(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) values[static_cast<size_t>(i)] = i + 1;
  return Permutation(std::move(values));
}

Permutation Permutation::longest(int n) {
  if (n < 1) throw ValidationError("permutation size must be positive");
  std::vector<int> values(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) values[static_cast<size_t>(i)] = n - i;
  return Permutation(std::move(values));
}

Permutation Permutation::parse(const std::string& text) {
  std::vector<int> values;
  if (text.find(',') != std::string::npos) {
    if (!text.empty() && text.back() == ',') {
      throw ValidationError("trailing separator in permutation '" + text + "'");
    }
    std::stringstream stream(text);
    std::string part;
    while (std::getline(stream, part, ',')) {
      size_t begin = part.find_first_not_of(" \t");
      size_t end = part.find_last_not_of(" \t");
      if (begin == std::string::npos) {
        throw ValidationError("empty entry in permutation '" + text + "'");
      }
      part = part.substr(begin, end - begin + 1);
      size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(part, &used);
      } catch (const std::exception&) {
        throw ValidationError("invalid permutation entry '" + part + "'");
      }
      if (used != part.size()) {
        throw ValidationError("invalid permutation entry '" + part + "'");
      }
      values.push_back(value);
    }
  } else {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw ValidationError("invalid character '" + std::string(1, c) +
                              "' in permutation '" + text + "'");
      }
      values.push_back(c - '0');
    }
  }
  return Permutation(std::move(values));
}

int Permutation::at(int position) const {
  if (position < 1 || position > size()) {
    throw ValidationError("permutation position " + std::to_string(position) +
                          " out of range");
  }
  return values_[static_cast<size_t>(position - 1)];
}

Permutation Permutation::inverse() const {
  std::vector<int> values(values_.size());
  for (int i = 1; i <= size(); ++i) {
    values[static_cast<size_t>(at(i) - 1)] = i;
  }
  return Permutation(std::move(values));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (size() != other.size()) {
    throw ValidationError("cannot compose permutations of different sizes");
  }
  std::vector<int> values(values_.size());
  for (int i = 1; i <= size(); ++i) {
    values[static_cast<size_t>(i - 1)] = at(other.at(i));
  }
  return Permutation(std::move(values));
}

long long Permutation::inversion_count() const {
  long long count = 0;
  for (int i = 1; i <= size(); ++i) {
    for (int j = i + 1; j <= size(); ++j) {
      if (at(i) > at(j)) ++count;
    }
  }
  return count;
}

std::string Permutation::str() const {
  if (size() <= 9) {
    std::string out;
    for (int v : values_) out += static_cast<char>('0' + v);
    return out;
  }
  return join(values_, ",");
}

LehmerCode::LehmerCode(std::vector<int> entries) : entries_(std::move(entries)) {
  const int n = static_cast<int>(entries_.size());
  if (n == 0) throw ValidationError("code must have at least one entry");
  for (int i = 1; i <= n; ++i) {
    int value = entries_[static_cast<size_t>(i - 1)];
    if (value < 0 || value > n - i) {
      throw ValidationError("code entry " + std::to_string(value) +
                            " at position " + std::to_string(i) +
                            " outside 0.." + std::to_string(n - i));
    }
  }
}

int LehmerCode::at(int position) const {
  if (position < 1 || position > size()) {
    throw ValidationError("code position out of range");
  }
  return entries_[static_cast<size_t>(position - 1)];
}

long long LehmerCode::sum() const {
  long long total = 0;
  for (int v : entries_) total += v;
  return total;
}

InversionCode::InversionCode(std::vector<int> entries) : entries_(std::move(entries)) {
  const int n = static_cast<int>(entries_.size());
  if (n == 0) throw ValidationError("code must have at least one entry");
  for (int i = 1; i <= n; ++i) {
    int value = entries_[static_cast<size_t>(i - 1)];
    if (value < 0 || value > i - 1) {
      throw ValidationError("code entry " + std::to_string(value) +
                            " at position " + std::to_string(i) +
                            " outside 0.." + std::to_string(i - 1));
    }
  }
}

int InversionCode::at(int position) const {
  if (position < 1 || position > size()) {
    throw ValidationError("code position out of range");
  }
  return entries_[static_cast<size_t>(position - 1)];
}

long long InversionCode::sum() const {
  long long total = 0;
  for (int v : entries_) total += v;
  return total;
}

LehmerCode lehmer_encode(const Permutation& sigma) {
  const int n = sigma.size();
  std::vector<int> entries(static_cast<size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    int count = 0;
    for (int j = i + 1; j <= n; ++j) {
      if (sigma.at(j) < sigma.at(i)) ++count;
    }
    entries[static_cast<size_t>(i - 1)] = count;
  }
  return LehmerCode(std::move(entries));
}

Permutation lehmer_decode(const LehmerCode& code) {
  const int n = code.size();
  // Remaining values in increasing order; entry L_i selects the (L_i+1)-th.
  std::vector<int> remaining(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) remaining[static_cast<size_t>(i)] = i + 1;
  std::vector<int> values;
  values.reserve(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    int index = code.at(i);
    values.push_back(remaining[static_cast<size_t>(index)]);
    remaining.erase(remaining.begin() + index);
  }
  return Permutation(std::move(values));
}

InversionCode inversion_encode(const Permutation& sigma) {
  const int n = sigma.size();
  Permutation inv = sigma.inverse();
  std::vector<int> entries(static_cast<size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    int count = 0;
    for (int j = 1; j < i; ++j) {
      if (inv.at(j) > inv.at(i)) ++count;
    }
    entries[static_cast<size_t>(i - 1)] = count;
  }
  return InversionCode(std::move(entries));
}

Permutation inversion_decode(const InversionCode& code) {
  const int n = code.size();
  // Insert values 1..n in turn; x_i of the previously placed (smaller) values
  // must end up to the right of value i.
  std::vector<int> values;
  values.reserve(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    int from_right = code.at(i);
    values.insert(values.end() - from_right, i);
  }
  return Permutation(std::move(values));
}

PermutationClassification classify(const Permutation& sigma) {
  const int n = sigma.size();
  PermutationClassification out;
  out.alternating = true;
  out.reverse_alternating = true;
  for (int i = 1; i < n; ++i) {
    bool descent = sigma.at(i) > sigma.at(i + 1);
    if (i % 2 == 1) {
      if (!descent) out.alternating = false;
      if (descent) out.reverse_alternating = false;
    } else {
      if (descent) out.alternating = false;
      if (!descent) out.reverse_alternating = false;
    }
  }
  out.avoids_132 = true;
  out.avoids_213 = true;
  for (int i = 1; i <= n && (out.avoids_132 || out.avoids_213); ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        if (sigma.at(i) < sigma.at(k) && sigma.at(k) < sigma.at(j)) {
          out.avoids_132 = false;
        }
        if (sigma.at(j) < sigma.at(i) && sigma.at(i) < sigma.at(k)) {
          out.avoids_213 = false;
        }
      }
    }
  }
  return out;
}

namespace {

// Constraint between adjacent Lehmer-code entries characterizing each class:
// position i has a descent exactly when L_i > L_{i+1}, and a 132 pattern
// exists exactly when some adjacent pair increases.
bool adjacent_code_ok(PermutationClass cls, int position, int left, int right) {
  switch (cls) {
    case PermutationClass::Alternating:
      return position % 2 == 1 ? left > right : left <= right;
    case PermutationClass::ReverseAlternating:
      return position % 2 == 1 ? left <= right : left > right;
    case PermutationClass::Avoiding132:
      return left >= right;
    case PermutationClass::Avoiding213:
      break;
  }
  throw ValidationError("unsupported class for code constraints");
}

void enumerate_codes(int n, PermutationClass cls, int position, std::vector<int>& code,
                     std::vector<Permutation>& out) {
  if (position > n) {
    out.push_back(lehmer_decode(LehmerCode(code)));
    return;
  }
  for (int value = 0; value <= n - position; ++value) {
    if (position > 1 &&
        !adjacent_code_ok(cls, position - 1, code[static_cast<size_t>(position - 2)], value)) {
      continue;
    }
    code[static_cast<size_t>(position - 1)] = value;
    enumerate_codes(n, cls, position + 1, code, out);
  }
}

}  // namespace

std::vector<Permutation> enumerate_class(int n, PermutationClass cls) {
  if (n < 1) throw ValidationError("class enumeration requires n >= 1");
  std::vector<Permutation> out;
  if (cls == PermutationClass::Avoiding213) {
    // w0 sigma^{-1} w0 sends 132-avoiding permutations onto 213-avoiding ones.
    for (const Permutation& sigma : enumerate_class(n, PermutationClass::Avoiding132)) {
      out.push_back(w0_conjugate_inverse(sigma));
    }
  } else {
    std::vector<int> code(static_cast<size_t>(n), 0);
    enumerate_codes(n, cls, 1, code, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool entrywise_leq(const std::vector<int>& lhs, const std::vector<int>& rhs) {
  for (size_t i = 0; i < lhs.size(); ++i) {
    if (lhs[i] > rhs[i]) return false;
  }
  return true;
}

// rank(i,j) = #{k <= i | sigma(k) >= j}; comparing these entrywise gives the
// subword order on permutations (identity minimal).
std::vector<std::vector<int>> rank_table(const Permutation& sigma) {
  const int n = sigma.size();
  std::vector<std::vector<int>> table(static_cast<size_t>(n) + 1,
                                      std::vector<int>(static_cast<size_t>(n) + 1, 0));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      table[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          table[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] +
          (sigma.at(i) >= j ? 1 : 0);
    }
  }
  return table;
}

std::vector<std::pair<int, int>> inversion_pairs(const Permutation& sigma) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= sigma.size(); ++i) {
    for (int j = i + 1; j <= sigma.size(); ++j) {
      if (sigma.at(i) > sigma.at(j)) pairs.emplace_back(i, j);
    }
  }
  return pairs;
}

}  // namespace

bool order_leq(const Permutation& lhs, const Permutation& rhs, PermutationOrder order) {
  if (lhs.size() != rhs.size()) {
    throw ValidationError("cannot compare permutations of different sizes");
  }
  switch (order) {
    case PermutationOrder::LeftMiddle:
      return entrywise_leq(lehmer_encode(lhs).entries(), lehmer_encode(rhs).entries());
    case PermutationOrder::RightMiddle:
      return entrywise_leq(inversion_encode(lhs).entries(), inversion_encode(rhs).entries());
    case PermutationOrder::Bruhat: {
      auto left = rank_table(lhs);
      auto right = rank_table(rhs);
      for (int i = 1; i <= lhs.size(); ++i) {
        for (int j = 1; j <= lhs.size(); ++j) {
          if (left[static_cast<size_t>(i)][static_cast<size_t>(j)] >
              right[static_cast<size_t>(i)][static_cast<size_t>(j)]) {
            return false;
          }
        }
      }
      return true;
    }
    case PermutationOrder::LeftWeak: {
      // Position-inversion containment: Inv(lhs) is a subset of Inv(rhs).
      // Entry-wise comparison of Lehmer codes (the left middle order) is a
      // coarser relation, and the two coincide on 213-avoiders.
      auto needed = inversion_pairs(lhs);
      auto have = inversion_pairs(rhs);
      return std::includes(have.begin(), have.end(), needed.begin(), needed.end());
    }
  }
  throw ValidationError("unknown permutation order");
}

Permutation w0_conjugate_inverse(const Permutation& sigma) {
  const int n = sigma.size();
  Permutation inv = sigma.inverse();
  std::vector<int> values(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    values[static_cast<size_t>(i - 1)] = n + 1 - inv.at(n + 1 - i);
  }
  return Permutation(std::move(values));
}

LaurentPoly inversion_genfun(const std::vector<Permutation>& perms, const Indeterminate& q) {
  LaurentPoly result(0);
  LaurentPoly qv = LaurentPoly::variable(q);
  for (const Permutation& sigma : perms) {
    result += qv.pow(sigma.inversion_count());
  }
  return result;
}

NumberTriangle::NumberTriangle(TriangleKind kind, std::vector<std::vector<BigInt>> rows)
    : kind_(kind), rows_(std::move(rows)) {}

const std::vector<BigInt>& NumberTriangle::row(int n) const {
  if (n < 1 || n > row_count()) {
    throw ValidationError("triangle row " + std::to_string(n) + " out of range");
  }
  return rows_[static_cast<size_t>(n - 1)];
}

NumberTriangle triangle(TriangleKind kind, int n_max) {
  if (n_max < 1) throw ValidationError("triangle needs at least one row");
  std::vector<std::vector<BigInt>> rows;
  rows.push_back({BigInt(1)});
  for (int n = 2; n <= n_max; ++n) {
    const std::vector<BigInt>& prev = rows.back();
    const int prev_len = static_cast<int>(prev.size());
    int len = 0;
    switch (kind) {
      case TriangleKind::Entringer:
      case TriangleKind::Ballot:
        len = n;
        break;
      case TriangleKind::Seidel:
        len = (n + 1) / 2;
        break;
    }
    std::vector<BigInt> row(static_cast<size_t>(len), BigInt(0));
    for (int k = 1; k <= len; ++k) {
      BigInt total = 0;
      for (int i = 1; i <= prev_len; ++i) {
        bool include = false;
        switch (kind) {
          case TriangleKind::Entringer:
            include = i > n - k;
            break;
          case TriangleKind::Ballot:
            include = i <= k;
            break;
          case TriangleKind::Seidel:
            include = i > n / 2 - k;
            break;
        }
        if (include) total += prev[static_cast<size_t>(i - 1)];
      }
      row[static_cast<size_t>(k - 1)] = total;
    }
    rows.push_back(std::move(row));
  }
  return NumberTriangle(kind, std::move(rows));
}

std::vector<BigInt> boustrophedon(const std::vector<BigInt>& seq) {
  const int m = static_cast<int>(seq.size());
  if (m == 0) throw ValidationError("boustrophedon transform needs a nonempty sequence");
  std::vector<BigInt> out;
  out.reserve(static_cast<size_t>(m));
  std::vector<BigInt> prev{seq[0]};
  for (int n = 1; n <= m; ++n) {
    std::vector<BigInt> row(static_cast<size_t>(n) + 1);
    row[0] = n < m ? seq[static_cast<size_t>(n)] : BigInt(0);
    for (int k = 1; k <= n; ++k) {
      row[static_cast<size_t>(k)] =
          row[static_cast<size_t>(k - 1)] + prev[static_cast<size_t>(n - k)];
    }
    out.push_back(row.back());
    prev = std::move(row);
  }
  return out;
}

BigInt euler_number(int n) {
  if (n < 0) throw ValidationError("euler_number requires n >= 0");
  return triangle(TriangleKind::Entringer, n + 1).row(n + 1).back();
}

BigInt catalan_number(int n) {
  if (n < 0) throw ValidationError("catalan_number requires n >= 0");
  return triangle(TriangleKind::Ballot, n + 1).row(n + 1).back();
}

BigInt genocchi_number(int n) {
  if (n < 1) throw ValidationError("genocchi_number requires n >= 1");
  return triangle(TriangleKind::Seidel, n).row(n).back();
}

}  // namespace snakedimer
