#include "pirick/hom.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pirick/error.hpp"
#include "pirick/ring_props.hpp"

namespace pirick {

std::vector<ModuleMap> hom_set(const FiniteModule& from, const FiniteModule& to, const Caps& caps,
                               std::size_t max_maps) {
    if (!same_ring(from.ring(), to.ring()))
        throw Error(ErrorKind::RingMismatch, "Hom needs modules over the same ring");
    auto gens = minimal_generators(from);

    double log_count = static_cast<double>(gens.size()) * std::log2(static_cast<double>(to.order()));
    if (log_count > std::log2(static_cast<double>(caps.hom)) + 1e-9)
        throw Error(ErrorKind::SizeCapExceeded, "Hom enumeration of |N|^g = " + std::to_string(to.order()) +
                                                    "^" + std::to_string(gens.size()) + " exceeds hom cap");

    std::vector<ElementSet> to_ann;
    to_ann.reserve(to.order());
    for (Elem y = 0; y < to.order(); ++y) to_ann.push_back(element_annihilator(to, y));
    std::vector<std::vector<Elem>> candidates;
    for (Elem g : gens) {
        auto ann = element_annihilator(from, g);
        std::vector<Elem> cands;
        for (Elem y = 0; y < to.order(); ++y)
            if (ann.is_subset_of(to_ann[y])) cands.push_back(y);
        candidates.push_back(std::move(cands));
    }

    std::vector<ModuleMap> out;
    std::vector<std::size_t> pos(gens.size(), 0);
    std::vector<Elem> images(gens.size());
    while (true) {
        for (std::size_t i = 0; i < gens.size(); ++i) images[i] = candidates[i][pos[i]];
        if (auto f = detail::extend_from_generators(from, to, gens, images)) {
            if (out.size() == max_maps)
                throw Error(ErrorKind::SizeCapExceeded, "more than " + std::to_string(max_maps) + " homomorphisms");
            out.push_back(std::move(*f));
        }
        std::size_t i = gens.size();
        while (i > 0) {
            --i;
            if (++pos[i] < candidates[i].size()) break;
            pos[i] = 0;
            if (i == 0) return out;
        }
        if (gens.empty()) return out;
    }
}

ModuleMap identity_map(const FiniteModule& m) {
    ModuleMap f;
    f.table.resize(m.order());
    std::iota(f.table.begin(), f.table.end(), Elem{0});
    return f;
}

ModuleMap zero_map(const FiniteModule& from, const FiniteModule&) {
    return ModuleMap{std::vector<Elem>(from.order(), 0)};
}

ModuleMap compose(const ModuleMap& f, const ModuleMap& g) {
    ModuleMap h;
    h.table.resize(g.table.size());
    for (std::size_t i = 0; i < g.table.size(); ++i) h.table[i] = f.table[g.table[i]];
    return h;
}

ModuleMap map_power(const FiniteModule& m, const ModuleMap& f, std::uint64_t n) {
    auto result = identity_map(m);
    for (std::uint64_t i = 0; i < n; ++i) result = compose(f, result);
    return result;
}

Submodule image(const FiniteModule& to, const ModuleMap& f) {
    Submodule s(to.order());
    for (Elem y : f.table) s.insert(y);
    return s;
}

Submodule kernel(const FiniteModule& from, const ModuleMap& f) {
    Submodule s(from.order());
    for (Elem x = 0; x < from.order(); ++x)
        if (f.table[x] == 0) s.insert(x);
    return s;
}

SubmoduleChain image_chain(const FiniteModule& m, const ModuleMap& f) {
    SubmoduleChain c;
    auto power = f;
    c.chain.push_back(image(m, power));
    while (true) {
        power = compose(f, power);
        auto next = image(m, power);
        if (next == c.chain.back()) break;
        c.chain.push_back(std::move(next));
    }
    c.stabilization = static_cast<std::uint32_t>(c.chain.size());
    return c;
}

SubmoduleChain kernel_chain(const FiniteModule& m, const ModuleMap& f) {
    SubmoduleChain c;
    auto power = f;
    c.chain.push_back(kernel(m, power));
    while (true) {
        power = compose(f, power);
        auto next = kernel(m, power);
        if (next == c.chain.back()) break;
        c.chain.push_back(std::move(next));
    }
    c.stabilization = static_cast<std::uint32_t>(c.chain.size());
    return c;
}

std::size_t EndRing::TableHash::operator()(const std::vector<Elem>& t) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (Elem x : t) h = (h ^ x) * 0x100000001b3ull;
    return h;
}

EndRing EndRing::make(const FiniteModule& m, const Caps& caps) {
    auto maps = hom_set(m, m, caps, std::min<std::size_t>(caps.ring, Caps::kMaxOrder));
    // A map is determined by its generator images, so sums and products are
    // looked up by those images alone.
    const auto gens = minimal_generators(m);
    const std::size_t g = gens.size();
    std::vector<Elem> images(maps.size() * g);
    std::unordered_map<std::uint64_t, Elem> index;
    auto key_of = [&](const Elem* img) {
        std::uint64_t key = 0;
        for (std::size_t i = 0; i < g; ++i) key = key * m.order() + img[i];
        return key;
    };
    for (Elem i = 0; i < maps.size(); ++i) {
        for (std::size_t j = 0; j < g; ++j) images[i * g + j] = maps[i].table[gens[j]];
        index.emplace(key_of(&images[i * g]), i);
    }
    auto lookup_key = [&](const Elem* img) {
        auto it = index.find(key_of(img));
        if (it == index.end()) throw Error(ErrorKind::AxiomViolation, "Hom set is not closed");
        return it->second;
    };
    auto lookup = [&](const ModuleMap& f) {
        std::vector<Elem> img(g);
        for (std::size_t j = 0; j < g; ++j) img[j] = f.table[gens[j]];
        return lookup_key(img.data());
    };
    std::vector<Elem> scratch(g);
    auto add = [&](Elem a, Elem b) {
        for (std::size_t j = 0; j < g; ++j) scratch[j] = m.add(images[a * g + j], images[b * g + j]);
        return lookup_key(scratch.data());
    };
    auto mul = [&](Elem a, Elem b) {
        for (std::size_t j = 0; j < g; ++j) scratch[j] = maps[a].table[images[b * g + j]];
        return lookup_key(scratch.data());
    };

    std::vector<Elem> members(maps.size());
    std::iota(members.begin(), members.end(), Elem{0});
    auto built = ring_from_operations(maps.size(), members, lookup(zero_map(m, m)), lookup(identity_map(m)),
                                      add, mul, caps);

    EndRing s;
    s.module_ = m;
    s.ring_ = std::make_shared<const FiniteRing>(std::move(built.value));
    s.maps_.reserve(maps.size());
    for (Elem i = 0; i < built.to_source.size(); ++i) {
        s.maps_.push_back(maps[built.to_source[i]]);
        s.lookup_.emplace(s.maps_.back().table, i);
    }
    return s;
}

Elem EndRing::index_of(const ModuleMap& f) const {
    auto it = lookup_.find(f.table);
    if (it == lookup_.end()) throw Error(ErrorKind::AxiomViolation, "map is not an endomorphism");
    return it->second;
}

ElementSet left_annihilator(const EndRing& s, const Submodule& x) {
    ElementSet out(s.size());
    auto members = x.elements();
    for (Elem g = 0; g < s.size(); ++g) {
        bool kills = true;
        for (Elem m : members)
            if (s.apply(g, m) != 0) {
                kills = false;
                break;
            }
        if (kills) out.insert(g);
    }
    return out;
}

ElementSet left_annihilator_of(const EndRing& s, Elem f) { return left_annihilator(s, s.image(f)); }

Submodule right_annihilator(const EndRing& s, const ElementSet& ideal) {
    auto gs = ideal.elements();
    Submodule out(s.module().order());
    for (Elem m = 0; m < s.module().order(); ++m) {
        bool killed = true;
        for (Elem g : gs)
            if (s.apply(g, m) != 0) {
                killed = false;
                break;
            }
        if (killed) out.insert(m);
    }
    return out;
}

std::unordered_map<Submodule, Elem, ElementSetHash> idempotent_images(const EndRing& s) {
    std::unordered_map<Submodule, Elem, ElementSetHash> out;
    for (Elem e : ring_idempotents(s.ring())) out.emplace(s.image(e), e);
    return out;
}

bool is_indecomposable(const EndRing& s) {
    for (Elem e : ring_idempotents(s.ring()))
        if (e != s.ring().zero() && e != s.ring().one()) return false;
    return true;
}

}  // namespace pirick
