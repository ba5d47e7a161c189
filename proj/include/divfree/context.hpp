#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace divfree {

// Ordered set of variable names shared by every polynomial of a ring.
// Contexts are immutable; polynomials hold a shared pointer and arithmetic
// between different contexts is rejected.
class VariableContext {
public:
    explicit VariableContext(std::vector<std::string> names) : names_(std::move(names)) {
        if (names_.empty()) throw std::invalid_argument("variable context needs at least one name");
        std::unordered_set<std::string> seen;
        for (const auto& n : names_) {
            if (n.empty()) throw std::invalid_argument("empty variable name");
            if (!seen.insert(n).second)
                throw std::invalid_argument("duplicate variable name '" + n + "'");
        }
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<std::size_t> index_of(const std::string& name) const {
        auto it = std::find(names_.begin(), names_.end(), name);
        if (it == names_.end()) return std::nullopt;
        return static_cast<std::size_t>(it - names_.begin());
    }

    friend bool operator==(const VariableContext& a, const VariableContext& b) {
        return a.names_ == b.names_;
    }

private:
    std::vector<std::string> names_;
};

using ContextPtr = std::shared_ptr<const VariableContext>;

inline ContextPtr make_context(std::vector<std::string> names) {
    return std::make_shared<VariableContext>(std::move(names));
}

inline bool same_context(const ContextPtr& a, const ContextPtr& b) {
    return a == b || (a && b && *a == *b);
}

inline void require_same_context(const ContextPtr& a, const ContextPtr& b) {
    if (!same_context(a, b)) throw std::invalid_argument("polynomials live in different variable contexts");
}

// Context with extra auxiliary variables prepended (used by elimination
// tricks; the '$' prefix keeps them out of any parseable input).
inline ContextPtr prepend_aux_variables(const ContextPtr& ctx, std::size_t count) {
    std::vector<std::string> names;
    names.reserve(ctx->size() + count);
    for (std::size_t i = 0; i < count; ++i) names.push_back("$t" + std::to_string(i));
    for (const auto& n : ctx->names()) names.push_back(n);
    return make_context(std::move(names));
}

inline ContextPtr remove_variable(const ContextPtr& ctx, std::size_t var) {
    if (var >= ctx->size()) throw std::out_of_range("variable index out of range");
    if (ctx->size() == 1)
        throw std::invalid_argument("cannot remove the last variable of a context");
    std::vector<std::string> names;
    names.reserve(ctx->size() - 1);
    for (std::size_t i = 0; i < ctx->size(); ++i)
        if (i != var) names.push_back(ctx->name(i));
    return make_context(std::move(names));
}

}  // namespace divfree
