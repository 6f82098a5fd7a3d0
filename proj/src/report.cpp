#include "lya/report.hpp"

#include <utility>

namespace lya {

void Check::fail(std::vector<std::size_t> tuple, Vector r)
{
    if (passed) {
        witness = std::move(tuple);
        residual = std::move(r);
    }
    passed = false;
    ++violations;
}

void Check::expect_zero(std::vector<std::size_t> tuple, const Vector& r)
{
    if (!is_zero(r)) fail(std::move(tuple), r);
}

bool Report::passed() const
{
    for (const auto& c : checks)
        if (!c.passed && !c.advisory) return false;
    return true;
}

Check& Report::add(std::string name)
{
    checks.push_back(Check{});
    checks.back().name = std::move(name);
    return checks.back();
}

const Check* Report::find(std::string_view name) const
{
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

bool Report::passed(std::string_view name) const
{
    const Check* c = find(name);
    return c != nullptr && c->passed;
}

void Report::merge(const Report& other, std::string_view prefix)
{
    for (auto c : other.checks) {
        if (!prefix.empty()) c.name = std::string(prefix) + "." + c.name;
        checks.push_back(std::move(c));
    }
    for (const auto& n : other.notes) notes.push_back(n);
}

}  // namespace lya
