#include "hopf/io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace hopf::io {

std::string digest(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

namespace {

long long to_ll(const Int& v) { return v.convert_to<long long>(); }

const json& field(const json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end())
        throw ParseError(std::string("missing field: ") + key);
    return *it;
}

std::size_t size_field(const json& j, const char* what) {
    if (!j.is_number_integer() || (j.is_number_integer() && j.get<long long>() < 0))
        throw ParseError(std::string(what) + " must be a nonnegative integer");
    return j.get<std::size_t>();
}

} // namespace

FusionRing ring_from_json(const json& doc) {
    if (!doc.is_object())
        throw ParseError("ring document must be a JSON object");
    FusionRing ring;
    ring.name = field(doc, "name").get<std::string>();
    for (const auto& label : field(doc, "basis"))
        ring.basis.push_back(label.get<std::string>());
    const std::size_t n = ring.basis.size();
    if (n == 0)
        throw ParseError("basis must be nonempty");
    ring.unit = size_field(field(doc, "unit"), "unit");
    for (const auto& d : field(doc, "dual"))
        ring.dual.push_back(size_field(d, "dual entry"));
    for (const auto& d : field(doc, "dims")) {
        if (!d.is_number_integer())
            throw ParseError("dims entries must be integers");
        ring.dims.emplace_back(d.get<long long>());
    }
    if (ring.unit >= n || ring.dual.size() != n || ring.dims.size() != n)
        throw MalformedTable("unit/dual/dims inconsistent with basis size");
    for (auto i : ring.dual)
        if (i >= n)
            throw MalformedTable("dual index out of range");

    ring.products.assign(n, std::vector<std::vector<std::pair<FusionRing::Index, Int>>>(n));
    std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
    for (const auto& entry : field(doc, "products")) {
        std::size_t left = size_field(field(entry, "left"), "left");
        std::size_t right = size_field(field(entry, "right"), "right");
        if (left >= n || right >= n)
            throw MalformedTable("product pair index out of range");
        if (seen[left][right])
            throw MalformedTable("duplicate product pair");
        seen[left][right] = true;
        auto& terms = ring.products[left][right];
        for (const auto& term : field(entry, "terms")) {
            if (!term.is_array() || term.size() != 2)
                throw ParseError("terms entries must be [index, multiplicity] pairs");
            std::size_t e = size_field(term[0], "term index");
            if (e >= n)
                throw MalformedTable("term index out of range");
            if (!term[1].is_number_integer())
                throw ParseError("multiplicity must be an integer");
            terms.emplace_back(e, Int(term[1].get<long long>()));
        }
        std::sort(terms.begin(), terms.end());
    }
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d)
            if (!seen[c][d])
                throw MalformedTable("missing product pair (" + std::to_string(c) + "," +
                                     std::to_string(d) + ")");
    return ring;
}

json ring_to_json(const FusionRing& ring) {
    json doc;
    doc["name"] = ring.name;
    doc["basis"] = ring.basis;
    doc["unit"] = ring.unit;
    doc["dual"] = ring.dual;
    json dims = json::array();
    for (const auto& d : ring.dims)
        dims.push_back(to_ll(d));
    doc["dims"] = std::move(dims);
    json products = json::array();
    for (std::size_t c = 0; c < ring.rank(); ++c)
        for (std::size_t d = 0; d < ring.rank(); ++d) {
            json entry;
            entry["left"] = c;
            entry["right"] = d;
            json terms = json::array();
            for (const auto& [e, mult] : ring.products[c][d])
                terms.push_back(json::array({e, to_ll(mult)}));
            entry["terms"] = std::move(terms);
            products.push_back(std::move(entry));
        }
    doc["products"] = std::move(products);
    return doc;
}

FiniteGroup group_from_json(const json& doc) {
    if (!doc.is_object())
        throw ParseError("group document must be a JSON object");
    const std::string name = field(doc, "name").get<std::string>();
    const std::size_t order = size_field(field(doc, "order"), "order");
    std::vector<std::vector<FiniteGroup::Elem>> table;
    for (const auto& row : field(doc, "table")) {
        std::vector<FiniteGroup::Elem> r;
        for (const auto& v : row)
            r.push_back(size_field(v, "table entry"));
        table.push_back(std::move(r));
    }
    if (table.size() != order)
        throw ParseError("table size disagrees with order");
    return FiniteGroup(name, std::move(table));
}

json group_to_json(const FiniteGroup& group) {
    json doc;
    doc["name"] = group.name();
    doc["order"] = group.order();
    doc["table"] = group.table();
    return doc;
}

namespace {

BasedRing based_ring_from_json(const json& j) {
    BasedRing ring;
    for (const auto& label : field(j, "basis"))
        ring.basis.push_back(label.get<std::string>());
    ring.unit = size_field(field(j, "unit"), "unit");
    for (const auto& plane : field(j, "constants")) {
        std::vector<std::vector<Int>> rows;
        for (const auto& row : plane) {
            std::vector<Int> r;
            for (const auto& v : row) {
                if (!v.is_number_integer())
                    throw ParseError("structure constants must be integers");
                r.emplace_back(v.get<long long>());
            }
            rows.push_back(std::move(r));
        }
        ring.constants.push_back(std::move(rows));
    }
    return ring;
}

MultMatrix matrix_from_json(const json& j) {
    MultMatrix m;
    for (const auto& row : j) {
        if (m.rows == 0)
            m.cols = row.size();
        else if (row.size() != m.cols)
            throw ParseError("ragged matrix");
        ++m.rows;
        for (const auto& v : row) {
            if (!v.is_number_integer())
                throw ParseError("matrix entries must be integers");
            m.entries.emplace_back(v.get<long long>());
        }
    }
    return m;
}

std::vector<FiniteGroup::Elem> elems_from_json(const json& j) {
    std::vector<FiniteGroup::Elem> out;
    for (const auto& v : j)
        out.push_back(size_field(v, "subgroup element"));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

RepData repdata_from_json(const json& doc) {
    RepData data;
    for (const auto& entry : field(doc, "rings"))
        data.rings[elems_from_json(field(entry, "subgroup"))] = based_ring_from_json(entry);
    for (const auto& entry : field(doc, "induction"))
        data.induction[{elems_from_json(field(entry, "sub")),
                        elems_from_json(field(entry, "super"))}] =
            matrix_from_json(field(entry, "matrix"));
    for (const auto& entry : field(doc, "restriction"))
        data.restriction[{elems_from_json(field(entry, "sub")),
                          elems_from_json(field(entry, "super"))}] =
            matrix_from_json(field(entry, "matrix"));
    for (const auto& entry : field(doc, "conjugation"))
        data.conjugation[{elems_from_json(field(entry, "sub")),
                          size_field(field(entry, "g"), "g")}] =
            matrix_from_json(field(entry, "matrix"));
    return data;
}

std::string canonical_dump(const json& doc) { return doc.dump(2) + "\n"; }

json load_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open file: " + path.string());
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw ParseError("invalid JSON in " + path.string() + ": " + e.what());
    }
    return doc;
}

FusionRing load_ring_file(const std::filesystem::path& path) {
    return ring_from_json(load_json_file(path));
}

FiniteGroup load_group_file(const std::filesystem::path& path) {
    return group_from_json(load_json_file(path));
}

std::filesystem::path data_directory() {
    if (const char* env = std::getenv("HOPFRING_DATA_DIR"))
        return env;
#ifdef HOPFRING_DEFAULT_DATA_DIR
    return HOPFRING_DEFAULT_DATA_DIR;
#else
    return "data/fixtures";
#endif
}

FusionRing load_fixture_ring(const std::string& name) {
    const auto path = data_directory() / (name + ".json");
    if (std::filesystem::exists(path))
        return load_ring_file(path);
    return builtin::fixture_ring(name);
}

FiniteGroup load_fixture_group(const std::string& name) {
    const auto path = data_directory() / (name + ".json");
    if (std::filesystem::exists(path))
        return load_group_file(path);
    return builtin::fixture_group(name);
}

void write_fixtures(const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    json manifest;

    auto emit = [&](const std::string& name, const json& doc) {
        const std::string text = canonical_dump(doc);
        std::ofstream out(dir / (name + ".json"), std::ios::binary);
        out << text;
        manifest[name + ".json"] = digest(text);
    };

    for (const auto& name : builtin::fixture_ring_names())
        emit(name, ring_to_json(builtin::fixture_ring(name)));

    // Deliberately inconsistent copy of rep_s3: the (v,v) product drops the
    // dimension count so validation can demonstrate a witnessed rejection.
    {
        FusionRing broken = builtin::fixture_ring("rep_s3");
        broken.name = "rep_s3_broken";
        broken.products[2][2] = {{0, 1}, {1, 1}, {2, 2}};
        emit("rep_s3_broken", ring_to_json(broken));
    }

    for (const auto& name : builtin::fixture_group_names())
        emit(name, group_to_json(builtin::fixture_group(name)));

    std::ofstream out(dir / "manifest.json", std::ios::binary);
    out << canonical_dump(manifest);
}

json Certificate::to_json() const {
    json doc;
    doc["command"] = command;
    doc["inputs"] = inputs_digest;
    json arr = json::array();
    std::vector<CertificateCheck> sorted = checks;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const auto& a, const auto& b) { return a.name < b.name; });
    for (const auto& c : sorted) {
        json entry;
        entry["name"] = c.name;
        entry["status"] = c.passed ? "pass" : "fail";
        entry["witness"] = c.witness;
        arr.push_back(std::move(entry));
    }
    doc["checks"] = std::move(arr);
    doc["summary"] = summary;
    doc["version"] = tool_version;
    if (seed)
        doc["seed"] = *seed;
    return doc;
}

bool Certificate::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const auto& c) { return c.passed; });
}

} // namespace hopf::io
