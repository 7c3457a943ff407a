#ifndef GRAPHPROD_GROUP_HPP_
#define GRAPHPROD_GROUP_HPP_

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace graphprod {

// A finite group given by its full multiplication table. Validated on
// construction: associativity is checked exhaustively, rows and columns must
// be permutations, and the identity is normalized to index 0 (input tables
// with the identity elsewhere are relabelled). Immutable afterwards, so
// instances can be shared freely across threads.
class GroupTable {
 public:
  // Z_n with index arithmetic mod n. n >= 1; Z_1 is accepted as a table but
  // rejected later as a vertex group.
  static GroupTable cyclic(int n, std::string label = "");

  // Validates an explicit table. Throws Error with code MalformedTable,
  // NoIdentity, NonAssociative or NoInverse.
  static GroupTable from_table(const std::vector<std::vector<int>>& table,
                               std::string label = "");

  int order() const noexcept { return order_; }
  const std::string& label() const noexcept { return label_; }

  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  int inv(int a) const { return inverse_[a]; }

  // Least n >= 1 with a^n = identity; divides order() by Lagrange.
  int element_order(int a) const;

  bool operator==(const GroupTable& other) const noexcept {
    return order_ == other.order_ && table_ == other.table_;
  }
  bool operator!=(const GroupTable& other) const noexcept { return !(*this == other); }

 private:
  GroupTable() = default;
  void validate() const;

  int order_ = 1;
  std::vector<int> table_;    // row-major, order_ x order_
  std::vector<int> inverse_;  // inverse_[a] * a = identity
  std::string label_;
};

using GroupPtr = std::shared_ptr<const GroupTable>;

// An element of a specific group, identified by table index. Index 0 is the
// identity; "nontrivial" means index != 0.
struct GroupElem {
  GroupPtr group;
  int index = 0;

  bool is_identity() const noexcept { return index == 0; }
};

// mode "mul": g*h (requires same group); mode "inv": inverse of g.
GroupElem group_mul(const GroupElem& g, const GroupElem& h);
GroupElem group_inv(const GroupElem& g);
int element_order(const GroupElem& g);

}  // namespace graphprod

#endif  // GRAPHPROD_GROUP_HPP_
