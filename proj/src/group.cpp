#include "graphprod/group.hpp"

#include <algorithm>
#include <string>

#include "graphprod/error.hpp"

namespace graphprod {

GroupTable GroupTable::cyclic(int n, std::string label) {
  if (n < 1) {
    throw Error("MalformedTable", "cyclic order must be >= 1, got " + std::to_string(n));
  }
  GroupTable g;
  g.order_ = n;
  g.label_ = label.empty() ? "Z" + std::to_string(n) : std::move(label);
  g.table_.resize(static_cast<std::size_t>(n) * n);
  g.inverse_.resize(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      g.table_[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
    }
    g.inverse_[a] = (n - a) % n;
  }
  return g;
}

GroupTable GroupTable::from_table(const std::vector<std::vector<int>>& table,
                                  std::string label) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error("MalformedTable", "empty table");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n) {
      throw Error("MalformedTable", "row " + std::to_string(i) + " has " +
                                        std::to_string(table[i].size()) +
                                        " entries, expected " + std::to_string(n));
    }
    for (int j = 0; j < n; ++j) {
      if (table[i][j] < 0 || table[i][j] >= n) {
        throw Error("MalformedTable", "entry (" + std::to_string(i) + "," +
                                          std::to_string(j) + ") = " +
                                          std::to_string(table[i][j]) + " out of range");
      }
    }
  }

  // Locate the two-sided identity.
  int e = -1;
  for (int i = 0; i < n && e < 0; ++i) {
    bool ok = true;
    for (int j = 0; j < n; ++j) {
      if (table[i][j] != j || table[j][i] != j) {
        ok = false;
        break;
      }
    }
    if (ok) e = i;
  }
  if (e < 0) throw Error("NoIdentity", "no two-sided identity element");

  // Relabel so the identity sits at index 0 (swap labels 0 <-> e).
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::swap(perm[0], perm[e]);

  GroupTable g;
  g.order_ = n;
  g.label_ = std::move(label);
  g.table_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      // perm is an involution, so it is its own inverse relabelling.
      g.table_[static_cast<std::size_t>(a) * n + b] = perm[table[perm[a]][perm[b]]];
    }
  }
  g.inverse_.assign(n, -1);
  g.validate();
  return g;
}

void GroupTable::validate() const {
  const int n = order_;
  // Rows and columns must be permutations (cancellation).
  for (int a = 0; a < n; ++a) {
    std::vector<bool> seen_row(n, false), seen_col(n, false);
    for (int b = 0; b < n; ++b) {
      const int r = mul(a, b);
      const int c = mul(b, a);
      if (seen_row[r]) {
        throw Error("MalformedTable", "row " + std::to_string(a) + " repeats value " +
                                          std::to_string(r));
      }
      if (seen_col[c]) {
        throw Error("MalformedTable", "column " + std::to_string(a) + " repeats value " +
                                          std::to_string(c));
      }
      seen_row[r] = true;
      seen_col[c] = true;
    }
  }
  // Exhaustive associativity check.
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          throw Error("NonAssociative", "witness (" + std::to_string(a) + "," +
                                            std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }
  // Inverses against identity 0.
  auto* self = const_cast<GroupTable*>(this);
  for (int a = 0; a < n; ++a) {
    int ia = -1;
    for (int b = 0; b < n; ++b) {
      if (mul(a, b) == 0 && mul(b, a) == 0) {
        ia = b;
        break;
      }
    }
    if (ia < 0) throw Error("NoInverse", "element " + std::to_string(a) + " has no inverse");
    self->inverse_[a] = ia;
  }
}

int GroupTable::element_order(int a) const {
  int x = a;
  int n = 1;
  while (x != 0) {
    x = mul(x, a);
    ++n;
  }
  return n;
}

GroupElem group_mul(const GroupElem& g, const GroupElem& h) {
  if (!g.group || !h.group || *g.group != *h.group) {
    throw Error("GroupMismatch", "mul of elements from different groups");
  }
  return GroupElem{g.group, g.group->mul(g.index, h.index)};
}

GroupElem group_inv(const GroupElem& g) {
  return GroupElem{g.group, g.group->inv(g.index)};
}

int element_order(const GroupElem& g) { return g.group->element_order(g.index); }

}  // namespace graphprod
