#include <algorithm>
#include <set>

#include "fphom/diagrams.hpp"

namespace fphom {

namespace {

constexpr std::size_t kMaxMorphisms = 200000;
constexpr std::size_t kMaxChains = 500000;

}  // namespace

nlohmann::json CategoryReport::to_json() const
{
    return {{"valid", valid}, {"violations", violations}};
}

DirectCategory::DirectCategory(std::vector<CategoryObject> objects, std::vector<CategoryArrow> arrows,
                               CompositionMode mode)
    : objects_(std::move(objects)), arrows_(std::move(arrows)), mode_(mode)
{
    std::set<std::string> ids;
    for (const auto& o : objects_)
        if (!ids.insert(o.id).second)
            throw ValidationError("duplicate object id '" + o.id + "'");
    std::set<std::string> aids;
    for (const auto& a : arrows_) {
        if (a.src >= objects_.size() || a.dst >= objects_.size())
            throw ValidationError("arrow '" + a.id + "' refers to an unknown object");
        if (!aids.insert(a.id).second)
            throw ValidationError("duplicate arrow id '" + a.id + "'");
    }
}

std::size_t DirectCategory::object_index(const std::string& id) const
{
    for (std::size_t i = 0; i < objects_.size(); ++i)
        if (objects_[i].id == id)
            return i;
    throw ValidationError("unknown object '" + id + "'");
}

DirectCategory DirectCategory::from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("objects"))
        throw ValidationError("category JSON needs \"objects\"");
    std::vector<CategoryObject> objects;
    for (const auto& o : j.at("objects")) {
        if (!o.contains("id") || !o.contains("lambda"))
            throw ValidationError("every object needs \"id\" and \"lambda\"");
        objects.push_back({o.at("id").get<std::string>(), o.at("lambda").get<int>()});
    }
    auto index = [&](const std::string& id) {
        for (std::size_t i = 0; i < objects.size(); ++i)
            if (objects[i].id == id)
                return i;
        throw ValidationError("arrow refers to unknown object '" + id + "'");
    };
    std::vector<CategoryArrow> arrows;
    if (j.contains("arrows"))
        for (const auto& a : j.at("arrows")) {
            if (!a.contains("src") || !a.contains("dst"))
                throw ValidationError("every arrow needs \"src\" and \"dst\"");
            const std::string id =
                a.contains("id") ? a.at("id").get<std::string>() : "a" + std::to_string(arrows.size());
            arrows.push_back({id, index(a.at("src").get<std::string>()), index(a.at("dst").get<std::string>())});
        }
    CompositionMode mode = CompositionMode::poset;
    if (j.contains("composition")) {
        const auto c = j.at("composition").get<std::string>();
        if (c == "free")
            mode = CompositionMode::free;
        else if (c != "poset")
            throw ValidationError("composition must be \"poset\" or \"free\"");
    }
    return DirectCategory(std::move(objects), std::move(arrows), mode);
}

namespace {

std::vector<std::vector<std::string>> complex_faces(const nlohmann::json& complex)
{
    if (!complex.is_object() || !complex.contains("vertices") || !complex.contains("facets"))
        throw ValidationError("simplicial complex needs \"vertices\" and \"facets\"");
    std::vector<std::string> vertices;
    for (const auto& v : complex.at("vertices"))
        vertices.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    std::set<std::vector<std::string>> faces;
    for (const auto& facet : complex.at("facets")) {
        std::vector<std::size_t> idx;
        for (const auto& v : facet) {
            const std::string name = v.is_string() ? v.get<std::string>() : v.dump();
            auto it = std::find(vertices.begin(), vertices.end(), name);
            if (it == vertices.end())
                throw ValidationError("facet uses unknown vertex '" + name + "'");
            idx.push_back(static_cast<std::size_t>(it - vertices.begin()));
        }
        std::sort(idx.begin(), idx.end());
        idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
        if (idx.size() > 16)
            throw ValidationError("facets with more than 16 vertices are not supported");
        for (unsigned mask = 0; mask < (1u << idx.size()); ++mask) {
            std::vector<std::string> face;
            for (std::size_t k = 0; k < idx.size(); ++k)
                if (mask & (1u << k))
                    face.push_back(vertices[idx[k]]);
            faces.insert(face);
        }
    }
    if (faces.empty())
        faces.insert({});
    std::vector<std::vector<std::string>> out(faces.begin(), faces.end());
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return out;
}

std::string face_id(const std::vector<std::string>& face)
{
    std::string s = "{";
    for (std::size_t i = 0; i < face.size(); ++i)
        s += (i ? "," : "") + face[i];
    return s + "}";
}

}  // namespace

DirectCategory DirectCategory::face_poset(const nlohmann::json& complex)
{
    const auto faces = complex_faces(complex);
    std::vector<CategoryObject> objects;
    for (const auto& f : faces)
        objects.push_back({face_id(f), static_cast<int>(f.size())});
    std::vector<CategoryArrow> arrows;
    // codimension-one inclusions generate the poset
    for (std::size_t a = 0; a < faces.size(); ++a)
        for (std::size_t b = 0; b < faces.size(); ++b)
            if (faces[b].size() == faces[a].size() + 1 &&
                std::includes(faces[b].begin(), faces[b].end(), faces[a].begin(), faces[a].end()))
                arrows.push_back({objects[a].id + "<" + objects[b].id, a, b});
    return DirectCategory(std::move(objects), std::move(arrows), CompositionMode::poset);
}

CategoryReport DirectCategory::validate() const
{
    CategoryReport r;
    for (const auto& o : objects_)
        if (o.lambda < 0) {
            r.valid = false;
            r.violations.push_back("object '" + o.id + "' has negative lambda");
        }
    for (const auto& a : arrows_) {
        if (objects_[a.dst].lambda <= objects_[a.src].lambda) {
            r.valid = false;
            r.violations.push_back("arrow '" + a.id + "' (" + objects_[a.src].id + " -> " + objects_[a.dst].id +
                                   ") does not raise lambda" +
                                   (a.src == a.dst ? " (non-identity endomorphism)" : ""));
        }
    }
    return r;
}

void DirectCategory::require_valid() const
{
    const auto r = validate();
    if (!r.valid)
        throw ValidationError("not a direct category: " + r.violations.front());
}

const std::vector<Morphism>& DirectCategory::morphisms() const
{
    if (morphisms_)
        return *morphisms_;
    require_valid();
    std::vector<Morphism> out;
    if (mode_ == CompositionMode::poset) {
        // one representative path per reachable pair, found breadth first
        for (std::size_t src = 0; src < objects_.size(); ++src) {
            std::vector<std::optional<std::vector<std::size_t>>> path(objects_.size());
            std::vector<std::size_t> queue{src};
            path[src] = std::vector<std::size_t>{};
            for (std::size_t q = 0; q < queue.size(); ++q)
                for (std::size_t a = 0; a < arrows_.size(); ++a)
                    if (arrows_[a].src == queue[q] && !path[arrows_[a].dst]) {
                        auto np = *path[queue[q]];
                        np.push_back(a);
                        path[arrows_[a].dst] = std::move(np);
                        queue.push_back(arrows_[a].dst);
                    }
            for (std::size_t k = 1; k < queue.size(); ++k)
                out.push_back({src, queue[k], *path[queue[k]]});
            if (out.size() > kMaxMorphisms)
                throw ValidationError("category has too many morphisms");
        }
    } else {
        // every path; lambda strictly increases so lengths are bounded
        std::vector<Morphism> frontier;
        for (std::size_t a = 0; a < arrows_.size(); ++a)
            frontier.push_back({arrows_[a].src, arrows_[a].dst, {a}});
        while (!frontier.empty()) {
            std::vector<Morphism> next;
            for (auto& m : frontier) {
                for (std::size_t a = 0; a < arrows_.size(); ++a)
                    if (arrows_[a].src == m.dst) {
                        Morphism n = m;
                        n.dst = arrows_[a].dst;
                        n.path.push_back(a);
                        next.push_back(std::move(n));
                    }
                out.push_back(std::move(m));
            }
            if (out.size() + next.size() > kMaxMorphisms)
                throw ValidationError("category has too many morphisms");
            frontier = std::move(next);
        }
    }
    morphisms_ = std::move(out);
    hom_.clear();
    for (std::size_t k = 0; k < morphisms_->size(); ++k)
        hom_[{(*morphisms_)[k].src, (*morphisms_)[k].dst}].push_back(k);
    return *morphisms_;
}

std::vector<std::size_t> DirectCategory::hom(std::size_t a, std::size_t b) const
{
    morphisms();
    auto it = hom_.find({a, b});
    return it == hom_.end() ? std::vector<std::size_t>{} : it->second;
}

std::size_t DirectCategory::compose(std::size_t g, std::size_t f) const
{
    const auto& ms = morphisms();
    const Morphism& mg = ms.at(g);
    const Morphism& mf = ms.at(f);
    if (mg.dst != mf.src)
        throw ValidationError("morphisms are not composable");
    const auto candidates = hom(mg.src, mf.dst);
    if (mode_ == CompositionMode::poset)
        return candidates.at(0);
    std::vector<std::size_t> path = mg.path;
    path.insert(path.end(), mf.path.begin(), mf.path.end());
    for (auto c : candidates)
        if (ms[c].path == path)
            return c;
    throw ValidationError("composite morphism not found");
}

std::vector<DirectCategory::Chain> DirectCategory::chains(int s) const
{
    std::vector<Chain> out;
    if (s < 0)
        return out;
    const auto& ms = morphisms();
    std::vector<std::vector<std::size_t>> outgoing(objects_.size());
    for (std::size_t k = 0; k < ms.size(); ++k)
        outgoing[ms[k].src].push_back(k);
    Chain cur;
    const auto rec = [&](auto&& self, int left) -> void {
        if (left == 0) {
            out.push_back(cur);
            if (out.size() > kMaxChains)
                throw ValidationError("nerve has too many nondegenerate chains");
            return;
        }
        for (auto k : outgoing[cur.objects.back()]) {
            cur.objects.push_back(ms[k].dst);
            cur.arrows.push_back(k);
            self(self, left - 1);
            cur.objects.pop_back();
            cur.arrows.pop_back();
        }
    };
    for (std::size_t i = 0; i < objects_.size(); ++i) {
        cur.objects = {i};
        cur.arrows.clear();
        rec(rec, s);
    }
    return out;
}

nlohmann::json DirectCategory::to_json() const
{
    nlohmann::json j;
    j["objects"] = nlohmann::json::array();
    for (const auto& o : objects_)
        j["objects"].push_back({{"id", o.id}, {"lambda", o.lambda}});
    j["arrows"] = nlohmann::json::array();
    for (const auto& a : arrows_)
        j["arrows"].push_back({{"id", a.id}, {"src", objects_[a.src].id}, {"dst", objects_[a.dst].id}});
    j["composition"] = mode_ == CompositionMode::poset ? "poset" : "free";
    return j;
}

}  // namespace fphom
