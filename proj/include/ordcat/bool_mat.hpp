#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ordcat {

/// Dense boolean matrix with value semantics; rows/cols may be zero.
class BoolMat {
public:
  BoolMat() = default;
  BoolMat(int rows, int cols, bool fill = false)
      : rows_(rows), cols_(cols),
        bits_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
              fill ? 1 : 0) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("BoolMat: negative dimension");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool at(int r, int c) const { return bits_[index(r, c)] != 0; }
  void set(int r, int c, bool v) { bits_[index(r, c)] = v ? 1 : 0; }

  bool operator==(const BoolMat& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && bits_ == other.bits_;
  }
  bool operator!=(const BoolMat& other) const { return !(*this == other); }

  /// Entry-wise implication: every true entry of *this is true in other.
  bool subset_of(const BoolMat& other) const {
    require_same_shape(other);
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] && !other.bits_[i]) return false;
    return true;
  }

  BoolMat meet(const BoolMat& other) const {
    require_same_shape(other);
    BoolMat out(rows_, cols_);
    for (std::size_t i = 0; i < bits_.size(); ++i)
      out.bits_[i] = static_cast<std::uint8_t>(bits_[i] & other.bits_[i]);
    return out;
  }

  BoolMat join(const BoolMat& other) const {
    require_same_shape(other);
    BoolMat out(rows_, cols_);
    for (std::size_t i = 0; i < bits_.size(); ++i)
      out.bits_[i] = static_cast<std::uint8_t>(bits_[i] | other.bits_[i]);
    return out;
  }

  BoolMat transpose() const {
    BoolMat out(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) out.set(c, r, at(r, c));
    return out;
  }

  /// Boolean product: out[r][c] = exists k with this[r][k] and other[k][c].
  BoolMat multiply(const BoolMat& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("BoolMat: product shape mismatch");
    BoolMat out(rows_, other.cols_);
    for (int r = 0; r < rows_; ++r)
      for (int k = 0; k < cols_; ++k)
        if (at(r, k))
          for (int c = 0; c < other.cols_; ++c)
            if (other.at(k, c)) out.set(r, c, true);
    return out;
  }

  int count() const {
    int n = 0;
    for (auto b : bits_) n += b;
    return n;
  }

private:
  std::size_t index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
      throw std::out_of_range("BoolMat: index out of range");
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
  }
  void require_same_shape(const BoolMat& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
      throw std::invalid_argument("BoolMat: shape mismatch");
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint8_t> bits_;
};

}  // namespace ordcat
