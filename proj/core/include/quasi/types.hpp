#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace quasi {

/// Position / length type. All external positions are 1-based.
using Index = std::int32_t;

/// A nonempty word over the byte alphabet, addressed 1-based.
class Text {
public:
    /// Throws std::invalid_argument on empty input or on inputs too long for Index.
    explicit Text(std::string_view bytes);

    Index size() const noexcept { return static_cast<Index>(bytes_.size()); }

    /// Symbol at 1-based position i.
    unsigned char operator[](Index i) const noexcept {
        return static_cast<unsigned char>(bytes_[static_cast<std::size_t>(i - 1)]);
    }

    std::string_view bytes() const noexcept { return bytes_; }

    /// u[start..start+len-1].
    std::string_view factor(Index start, Index len) const;

    Text prefix(Index len) const;
    Text reversed() const;

private:
    std::string bytes_;
};

/// An integer array addressed 1..n, used for all per-position results
/// (period, border, cover and seed arrays). Entry 0 exists but is unused.
class PosArray {
public:
    PosArray() = default;
    explicit PosArray(Index n, Index fill = 0);
    PosArray(std::initializer_list<Index> values);
    explicit PosArray(std::span<const Index> values);

    Index size() const noexcept { return static_cast<Index>(data_.size()) - 1; }

    Index operator[](Index i) const noexcept { return data_[static_cast<std::size_t>(i)]; }
    Index& operator[](Index i) noexcept { return data_[static_cast<std::size_t>(i)]; }

    /// Entries 1..n as a 0-based view.
    std::span<const Index> values() const noexcept {
        return std::span<const Index>(data_).subspan(1);
    }
    std::vector<Index> to_vector() const { return {data_.begin() + 1, data_.end()}; }

    friend bool operator==(const PosArray& a, const PosArray& b) { return a.values_equal(b.values()); }
    friend bool operator==(const PosArray& a, const std::vector<Index>& b) { return a.values_equal(b); }

private:
    bool values_equal(std::span<const Index> other) const;

    std::vector<Index> data_ = std::vector<Index>(1, 0);
};

/// A factor u[start..start+len-1] of some host text.
struct FactorRef {
    Index start = 0;
    Index len = 0;

    Index end() const noexcept { return start + len - 1; }

    friend bool operator==(const FactorRef&, const FactorRef&) = default;
};

std::ostream& operator<<(std::ostream& os, const PosArray& a);
std::ostream& operator<<(std::ostream& os, const FactorRef& f);

} // namespace quasi
