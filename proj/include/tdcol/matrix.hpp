#pragma once

#include <algorithm>
#include <initializer_list>
#include <vector>

#include "tdcol/errors.hpp"

namespace tdcol {

// Cell of a trigraph partition matrix.
enum class Entry : unsigned char { Zero, One, Star };

// Square matrix over {0, 1, *} driving M-partition problems: diagonal 1
// demands a strong clique part, diagonal 0 an independent part; off-diagonal
// 1 demands all arcs from part i to part j, 0 forbids them, * is free.
class PartitionMatrix {
public:
    PartitionMatrix() = default;
    explicit PartitionMatrix(int m) : m_(m) {
        if (m < 0) throw RangeError("negative matrix size");
        cells_.assign(static_cast<size_t>(m) * m, Entry::Star);
    }
    PartitionMatrix(int m, std::initializer_list<Entry> cells) : PartitionMatrix(m) {
        if (static_cast<int>(cells.size()) != m * m) throw RangeError("matrix cell count mismatch");
        std::copy(cells.begin(), cells.end(), cells_.begin());
    }

    int size() const { return m_; }
    Entry at(int i, int j) const { return cells_[static_cast<size_t>(i) * m_ + j]; }
    void set(int i, int j, Entry e) {
        if (i < 0 || i >= m_ || j < 0 || j >= m_) throw RangeError("matrix index out of range");
        cells_[static_cast<size_t>(i) * m_ + j] = e;
    }

    bool operator==(const PartitionMatrix&) const = default;

private:
    int m_ = 0;
    std::vector<Entry> cells_;
};

// Matrix for (k,l)-colouring: k independent parts then l clique parts, every
// off-diagonal entry free.
inline PartitionMatrix kl_matrix(int k, int l) {
    if (k < 0 || l < 0) throw RangeError("negative part count");
    PartitionMatrix m(k + l);
    for (int i = 0; i < k + l; ++i) m.set(i, i, i < k ? Entry::Zero : Entry::One);
    return m;
}

}  // namespace tdcol
