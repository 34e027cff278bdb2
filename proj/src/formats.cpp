#include "suitable/formats.hpp"

#include <fstream>
#include <sstream>

namespace suitable {

namespace {

    template <typename T>
    T field(const Json& j, const char* key)
    {
        if (! j.is_object() || ! j.contains(key))
            throw InvalidArgument(std::string("missing field '") + key + "'");
        try {
            return j.at(key).get<T>();
        }
        catch (const nlohmann::json::exception& err) {
            throw InvalidArgument(std::string("bad field '") + key + "': " + err.what());
        }
    }

    std::string read_all(const std::string& path)
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw InvalidArgument("cannot open '" + path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }

}  // namespace

std::string array_to_text(const PermutationArray& array, int t)
{
    std::ostringstream out;
    out << array.n_rows() << ' ' << array.n_symbols() << ' ' << t << '\n';
    for (const Row& row : array.rows()) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? " " : "") << row[i];
        out << '\n';
    }
    return out.str();
}

TextArray array_from_text(std::istream& in)
{
    long long n = 0, v = 0, t = 0;
    if (! (in >> n >> v >> t))
        throw InvalidArgument("text array: expected header 'N v t'");
    if (n < 1 || v < 0 || t < 1)
        throw InvalidArgument("text array: need N >= 1, v >= 0, t >= 1");
    std::vector<Row> rows(static_cast<std::size_t>(n), Row(static_cast<std::size_t>(v)));
    for (auto& row : rows)
        for (auto& s : row)
            if (! (in >> s))
                throw InvalidArgument("text array: expected " + std::to_string(n * v) + " symbols");
    std::string extra;
    if (in >> extra)
        throw InvalidArgument("text array: trailing data '" + extra + "'");
    return {PermutationArray(static_cast<std::size_t>(v), std::move(rows)), static_cast<int>(t)};
}

TextArray array_from_text(const std::string& text)
{
    std::istringstream in(text);
    return array_from_text(in);
}

Json packing_to_json(const BlockPacking& packing)
{
    return Json{{"l", packing.l}, {"k", packing.k}, {"blocks", packing.blocks}};
}

BlockPacking packing_from_json(const Json& j)
{
    return {field<int>(j, "l"), field<int>(j, "k"), field<std::vector<Block>>(j, "blocks")};
}

Json coloring_to_json(const EdgeMultiColoring& col)
{
    Json edges = Json::array();
    for (int u = 1; u <= col.n(); ++u)
        for (int v = u + 1; v <= col.n(); ++v)
            edges.push_back(Json::array({u, v, color_list(col.colors(u, v))}));
    return Json{{"n", col.n()}, {"r", col.r()}, {"m", col.m()}, {"edges", edges}};
}

EdgeMultiColoring coloring_from_json(const Json& j)
{
    EdgeMultiColoring col(field<int>(j, "n"), field<int>(j, "r"), field<int>(j, "m"));
    const auto edges = field<Json>(j, "edges");
    if (! edges.is_array() || edges.size() != col.edge_count())
        throw InvalidArgument("coloring: expected " + std::to_string(col.edge_count()) + " edges");
    std::vector<char> seen(col.edge_count(), 0);
    for (const Json& e : edges) {
        if (! e.is_array() || e.size() != 3)
            throw InvalidArgument("coloring: each edge is [u, v, [colors]]");
        const int u = e[0].get<int>();
        const int v = e[1].get<int>();
        if (u >= v)
            throw InvalidArgument("coloring: edges need u < v");
        const std::size_t idx = col.edge_index(u, v);
        if (seen[idx])
            throw InvalidArgument("coloring: edge listed twice");
        seen[idx] = 1;
        col.set_colors(u, v, e[2].get<std::vector<int>>());
    }
    return col;
}

Json witness_triple_to_json(const ViolationWitness& w)
{
    return Json{{"sigma", w.sigma}, {"t_set", w.t_set}, {"count", w.count}};
}

ViolationWitness witness_triple_from_json(const Json& j)
{
    return {field<Symbol>(j, "sigma"), field<std::vector<Symbol>>(j, "t_set"), field<long long>(j, "count")};
}

Json verdict_to_json(const Verdict& verdict, bool include_timing)
{
    Json stats{{"subsets_examined", verdict.stats.subsets_examined}};
    if (include_timing)
        stats["elapsed_ms"] = verdict.stats.elapsed_ms;
    Json out{{"tier", to_string(verdict.tier)}, {"status", to_string(verdict.status)}, {"stats", stats}};
    out["witness"] = verdict.witness ? witness_triple_to_json(*verdict.witness) : Json(nullptr);
    if (! verdict.note.empty())
        out["note"] = verdict.note;
    return out;
}

Verdict verdict_from_json(const Json& j)
{
    Verdict verdict;
    verdict.tier = tier_from_string(field<std::string>(j, "tier"));
    verdict.status = status_from_string(field<std::string>(j, "status"));
    if (j.contains("stats")) {
        const Json& stats = j["stats"];
        verdict.stats.subsets_examined = stats.value("subsets_examined", std::uint64_t{0});
        verdict.stats.elapsed_ms = stats.value("elapsed_ms", 0.0);
    }
    if (j.contains("witness") && ! j["witness"].is_null())
        verdict.witness = witness_triple_from_json(j["witness"]);
    verdict.note = j.value("note", std::string{});
    if (verdict.status == Status::falsified && ! verdict.witness)
        throw InvalidArgument("certificate: falsified status needs a witness triple");
    return verdict;
}

Json witness_to_json(const CoreWitness& witness, bool include_timing)
{
    const Provenance& p = witness.provenance;
    Json prov{{"route", p.route}, {"s", p.s},         {"delta", p.delta}, {"alpha", p.alpha},
              {"l", p.l},         {"k_vec", p.k_vec}, {"seed", p.seed}};
    prov["packing"] = p.packing ? packing_to_json(*p.packing) : Json(nullptr);
    if (p.assignment)
        prov["assignment"] = Json{{"c", p.assignment->c}, {"b_prime", p.assignment->b_prime}};
    else
        prov["assignment"] = nullptr;
    prov["coloring"] = p.coloring ? coloring_to_json(*p.coloring) : Json(nullptr);

    return Json{{"schema", witness_schema_version},
                {"n", witness.core.n_rows()},
                {"v", witness.core.n_symbols()},
                {"t", witness.params.t},
                {"rows", witness.core.rows()},
                {"provenance", prov},
                {"certificate", verdict_to_json(witness.certificate, include_timing)}};
}

CoreWitness witness_from_json(const Json& j)
{
    const int schema = field<int>(j, "schema");
    if (schema != witness_schema_version)
        throw InvalidArgument("unsupported witness schema " + std::to_string(schema));
    const auto n = field<std::size_t>(j, "n");
    const auto v = field<std::size_t>(j, "v");
    CoreWitness w;
    w.params.t = field<int>(j, "t");
    w.core = PermutationArray(v, field<std::vector<Row>>(j, "rows"));
    if (w.core.n_rows() != n)
        throw InvalidArgument("witness: n does not match the number of rows");

    if (j.contains("provenance") && ! j["provenance"].is_null()) {
        const Json& p = j["provenance"];
        Provenance& out = w.provenance;
        out.route = p.value("route", std::string{"input"});
        out.s = p.value("s", 0);
        out.delta = p.value("delta", 0);
        out.alpha = p.value("alpha", 0);
        out.l = p.value("l", 0);
        out.k_vec = p.value("k_vec", std::vector<int>{});
        out.seed = p.value("seed", std::uint64_t{0});
        if (p.contains("packing") && ! p["packing"].is_null())
            out.packing = packing_from_json(p["packing"]);
        if (p.contains("assignment") && ! p["assignment"].is_null()) {
            BlockAssignment a;
            a.c = field<int>(p["assignment"], "c");
            a.b_prime = field<std::vector<Block>>(p["assignment"], "b_prime");
            a.v = static_cast<int>(a.b_prime.size());
            for (int i = 1; i <= a.v; ++i) {
                Block b = a.b_prime[static_cast<std::size_t>(i - 1)];
                if (i > a.c)
                    b.erase(std::remove(b.begin(), b.end(), i), b.end());
                a.b.push_back(std::move(b));
            }
            out.assignment = std::move(a);
        }
        if (p.contains("coloring") && ! p["coloring"].is_null())
            out.coloring = coloring_from_json(p["coloring"]);
    }
    else
        w.provenance.route = "input";

    if (j.contains("certificate") && ! j["certificate"].is_null())
        w.certificate = verdict_from_json(j["certificate"]);
    else
        w.certificate.status = Status::unknown;
    return w;
}

CoreWitness read_witness_file(const std::string& path)
{
    const std::string text = read_all(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        Json j;
        try {
            j = Json::parse(text);
        }
        catch (const nlohmann::json::exception& err) {
            throw InvalidArgument("'" + path + "' is not valid JSON: " + err.what());
        }
        return witness_from_json(j);
    }
    TextArray parsed = array_from_text(text);
    CoreWitness w;
    w.core = std::move(parsed.array);
    w.params.t = parsed.t;
    w.provenance.route = "input";
    w.certificate.status = Status::unknown;
    return w;
}

void write_text_file(const std::string& path, const std::string& contents)
{
    std::ofstream out(path, std::ios::binary);
    if (! out)
        throw InvalidArgument("cannot write '" + path + "'");
    out << contents;
    if (! out)
        throw InvalidArgument("failed writing '" + path + "'");
}

}  // namespace suitable
