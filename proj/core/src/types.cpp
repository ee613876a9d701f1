#include "quasi/types.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace quasi {

namespace {
// Leaves room for 2n suffix-tree nodes and an n+1 sentinel.
constexpr std::size_t kMaxText = std::numeric_limits<Index>::max() / 2 - 2;
} // namespace

Text::Text(std::string_view bytes) : bytes_(bytes) {
    if (bytes_.empty()) throw std::invalid_argument("text must be nonempty");
    if (bytes_.size() > kMaxText) throw std::invalid_argument("text too long");
}

std::string_view Text::factor(Index start, Index len) const {
    if (start < 1 || len < 0 || start - 1 + len > size())
        throw std::invalid_argument("factor out of range");
    return std::string_view(bytes_).substr(static_cast<std::size_t>(start - 1),
                                           static_cast<std::size_t>(len));
}

Text Text::prefix(Index len) const {
    if (len < 1 || len > size()) throw std::invalid_argument("prefix length out of range");
    return Text(factor(1, len));
}

Text Text::reversed() const {
    std::string r(bytes_.rbegin(), bytes_.rend());
    return Text(r);
}

PosArray::PosArray(Index n, Index fill) {
    if (n < 0) throw std::invalid_argument("negative array size");
    data_.assign(static_cast<std::size_t>(n) + 1, fill);
    data_[0] = 0;
}

PosArray::PosArray(std::initializer_list<Index> values) : PosArray(std::span<const Index>(values.begin(), values.size())) {}

PosArray::PosArray(std::span<const Index> values) {
    data_.reserve(values.size() + 1);
    data_.insert(data_.end(), values.begin(), values.end());
}

bool PosArray::values_equal(std::span<const Index> other) const {
    auto mine = values();
    return std::equal(mine.begin(), mine.end(), other.begin(), other.end());
}

std::ostream& operator<<(std::ostream& os, const PosArray& a) {
    os << '[';
    for (Index i = 1; i <= a.size(); ++i) {
        if (i > 1) os << ',';
        os << a[i];
    }
    return os << ']';
}

std::ostream& operator<<(std::ostream& os, const FactorRef& f) {
    return os << "(start=" << f.start << ", len=" << f.len << ')';
}

} // namespace quasi
