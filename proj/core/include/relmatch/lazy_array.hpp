#pragma once

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <type_traits>
#include <unordered_map>

namespace relmatch {

/// Array with O(1) allocation and O(1) reset.
///
/// Cells carry an epoch stamp; a cell is initialised only if its stamp equals
/// the current epoch. Backing storage comes from calloc, so large arrays are
/// mapped lazily by the OS and only touched pages cost anything. reset() bumps
/// the epoch, which invalidates every cell at once.
template <class T>
  requires std::is_trivially_copyable_v<T>
class LazyArray {
 public:
  LazyArray() = default;

  explicit LazyArray(std::size_t size) : size_(size) {
    if (size == 0) return;
    void* raw = std::calloc(size, sizeof(Cell));
    if (raw == nullptr) throw std::bad_alloc();
    cells_.reset(static_cast<Cell*>(raw));
  }

  std::size_t size() const { return size_; }

  bool is_set(std::size_t i) const { return cells_[i].stamp == epoch_; }

  const T* find(std::size_t i) const {
    return is_set(i) ? &cells_[i].value : nullptr;
  }

  T value_or(std::size_t i, T fallback) const {
    return is_set(i) ? cells_[i].value : fallback;
  }

  void set(std::size_t i, T value) {
    cells_[i].stamp = epoch_;
    cells_[i].value = value;
  }

  void reset() {
    if (++epoch_ == 0) {
      // Stamp wrap-around: fall back to a real clear once every 2^32 resets.
      if (size_ != 0) std::memset(static_cast<void*>(cells_.get()), 0, size_ * sizeof(Cell));
      epoch_ = 1;
    }
  }

 private:
  struct Cell {
    std::uint32_t stamp;
    T value;
  };
  struct FreeDeleter {
    void operator()(Cell* p) const { std::free(p); }
  };

  std::unique_ptr<Cell[], FreeDeleter> cells_;
  std::size_t size_ = 0;
  std::uint32_t epoch_ = 1;
};

/// Sparse (state, symbol) -> T table.
///
/// Uses a LazyArray over rows * columns when that fits a fixed budget and a
/// hash map otherwise, so huge alphabets do not reserve huge address ranges.
template <class T>
  requires std::is_trivially_copyable_v<T>
class PairTable {
 public:
  static constexpr std::size_t kDenseLimit = std::size_t{1} << 26;

  PairTable() = default;

  PairTable(std::size_t rows, std::size_t columns) : columns_(columns) {
    if (rows != 0 && columns != 0 && rows <= kDenseLimit / columns) {
      dense_ = LazyArray<T>(rows * columns);
      use_dense_ = true;
    }
  }

  std::size_t columns() const { return columns_; }

  const T* find(std::size_t row, std::size_t column) const {
    if (column >= columns_) return nullptr;
    const std::size_t key = row * columns_ + column;
    if (use_dense_) return dense_.find(key);
    auto it = sparse_.find(key);
    return it == sparse_.end() ? nullptr : &it->second;
  }

  void set(std::size_t row, std::size_t column, T value) {
    const std::size_t key = row * columns_ + column;
    if (use_dense_) {
      dense_.set(key, value);
    } else {
      sparse_[key] = value;
    }
  }

  void reset() {
    if (use_dense_) {
      dense_.reset();
    } else {
      sparse_.clear();
    }
  }

 private:
  std::size_t columns_ = 0;
  bool use_dense_ = false;
  LazyArray<T> dense_;
  std::unordered_map<std::size_t, T> sparse_;
};

}  // namespace relmatch
