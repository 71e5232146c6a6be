#pragma once

#include <memory>
#include <mutex>
#include <string_view>

#include "hecketrace/dihedral.hpp"
#include "hecketrace/rpoly.hpp"
#include "hecketrace/trace.hpp"

namespace hecketrace {

/// A datum together with its memo tables. Non-copyable; all members are safe for concurrent use.
class HeckeContext {
 public:
  explicit HeckeContext(std::shared_ptr<const CartanDatum> datum)
      : datum_(std::move(datum)), traces_(*datum_), rpolys_(*datum_) {}

  static std::unique_ptr<HeckeContext> create(std::string_view type, std::size_t max_order = default_max_order()) {
    return std::make_unique<HeckeContext>(parse_type(type, max_order));
  }

  HeckeContext(const HeckeContext&) = delete;
  HeckeContext& operator=(const HeckeContext&) = delete;

  const CartanDatum& datum() const { return *datum_; }
  const std::shared_ptr<const CartanDatum>& datum_ptr() const { return datum_; }
  TraceTable& traces() { return traces_; }
  RPolyTable& rpolys() { return rpolys_; }

  bool has_characters() const { return datum_->rank() <= 2; }

  /// Built on first use; throws UnsupportedType above rank 2.
  const CharacterTable& characters() {
    std::lock_guard<std::mutex> lock(chars_mutex_);
    if (!chars_) chars_ = std::make_unique<CharacterTable>(*datum_);
    return *chars_;
  }

  WeylElement element(ElementId id) const { return {*datum_, id}; }
  WeylElement element(const Word& word) const { return element_from_word(*datum_, word); }

 private:
  std::shared_ptr<const CartanDatum> datum_;
  TraceTable traces_;
  RPolyTable rpolys_;
  std::mutex chars_mutex_;
  std::unique_ptr<CharacterTable> chars_;
};

}  // namespace hecketrace
