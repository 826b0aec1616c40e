#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "descent.hpp"
#include "perm.hpp"

namespace gbdq {

// weakly decreasing positive parts
using Partition = std::vector<int>;

bool is_partition(const Partition& lam);
int partition_size(const Partition& lam);
Partition conjugate(const Partition& lam);
std::vector<Partition> partitions_of(int n);
std::string partition_text(const Partition& lam);  // "[3,2]"

// Rows are stored bottom-up: rows()[0] is the bottom row, and "above" means
// a higher row index.  Columns strictly increase upward.
class StandardTableau {
 public:
  static StandardTableau from_rows(std::vector<std::vector<int>> rows);
  static StandardTableau trusted(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Partition shape() const;
  int size() const;

  // "1,2,5/3,4", bottom row first
  std::string text() const;
  static StandardTableau parse(const std::string& s);

  friend auto operator<=>(const StandardTableau&, const StandardTableau&) =
      default;

 private:
  std::vector<std::vector<int>> rows_;
};

std::vector<StandardTableau> enumerate_syt(const Partition& lam);
uint64_t num_syt(const Partition& lam);

// {i : i+1 is in a strictly higher row than i}
DescentSet syt_descents(const StandardTableau& t);

// entry m in row i, column j contributes j-i (1-based, so a diagonal word)
std::vector<int> tableau_chain_labels(const StandardTableau& t);

// Haiman's elementary dual equivalence: fixed when the descents of the word
// at i-1 and i are both present or both absent; otherwise i changes places
// with whichever of i-1, i+1 sits further from it (taxicab distance).
StandardTableau haiman_phi(const StandardTableau& t, int i);

}  // namespace gbdq
