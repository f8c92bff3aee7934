#include "cprime/verdict.hpp"

namespace cprime {

namespace {

std::string join(const std::vector<Index>& xs)
{
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i > 0) s += ',';
        s += std::to_string(xs[i]);
    }
    return s;
}

}  // namespace

std::string describe(const Witness& w)
{
    std::string s;
    if (!w.ring_elems.empty()) s += "ring(" + join(w.ring_elems) + ")";
    if (!w.module_elems.empty()) s += (s.empty() ? "" : " ") + std::string("module(") + join(w.module_elems) + ")";
    for (const auto& set : w.sets) s += (s.empty() ? "" : " ") + set.to_string();
    return s.empty() ? "-" : s;
}

}  // namespace cprime
