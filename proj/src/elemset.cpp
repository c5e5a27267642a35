#include "deltakit/elemset.hpp"

#include "deltakit/errors.hpp"

namespace deltakit {

GroundSet::GroundSet() : data_(std::make_shared<const Data>()) {}

GroundSet::GroundSet(std::vector<std::string> labels) {
    if (labels.size() > static_cast<std::size_t>(kMaxElements))
        throw SizeGuardError("ground set has " + std::to_string(labels.size()) +
                             " elements; at most 64 are supported");
    auto d = std::make_shared<Data>();
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (!d->index.emplace(labels[i], static_cast<int>(i)).second)
            throw DomainError("duplicate ground-set label '" + labels[i] + "'");
    }
    d->labels = std::move(labels);
    data_ = std::move(d);
}

GroundSet GroundSet::numbered(int n, int first) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(first + i));
    return GroundSet(std::move(labels));
}

GroundSet GroundSet::from_chars(std::string_view chars) {
    std::vector<std::string> labels;
    for (char c : chars) labels.emplace_back(1, c);
    return GroundSet(std::move(labels));
}

int GroundSet::find(std::string_view label) const {
    auto it = data_->index.find(std::string(label));
    return it == data_->index.end() ? -1 : it->second;
}

int GroundSet::index(std::string_view label) const {
    const int i = find(label);
    if (i < 0) throw DomainError("element '" + std::string(label) + "' is not in the ground set");
    return i;
}

ElemSet GroundSet::set_of(std::span<const std::string> labels) const {
    ElemSet s;
    for (const auto& l : labels) s = s.with(index(l));
    return s;
}

ElemSet GroundSet::set_of(std::initializer_list<std::string_view> labels) const {
    ElemSet s;
    for (auto l : labels) s = s.with(index(l));
    return s;
}

GroundSet GroundSet::without(int i) const {
    std::vector<std::string> labels = data_->labels;
    labels.erase(labels.begin() + i);
    return GroundSet(std::move(labels));
}

GroundSet GroundSet::restricted(ElemSet keep) const {
    std::vector<std::string> labels;
    keep.for_each([&](int i) { labels.push_back(label(i)); });
    return GroundSet(std::move(labels));
}

std::string GroundSet::format(ElemSet s) const {
    std::string out = "{";
    bool first = true;
    s.for_each([&](int i) {
        if (!first) out += ',';
        out += label(i);
        first = false;
    });
    return out + "}";
}

ElemSet compress(ElemSet s, ElemSet keep) {
    std::uint64_t out = 0;
    int pos = 0;
    keep.for_each([&](int i) {
        if (s.contains(i)) out |= std::uint64_t{1} << pos;
        ++pos;
    });
    return ElemSet{out};
}

}  // namespace deltakit
