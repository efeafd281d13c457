#include "loopcut/generators.hpp"

#include <algorithm>
#include <sstream>

#include "loopcut/graph_analysis.hpp"
#include "loopcut/rng.hpp"

namespace loopcut {

namespace {

constexpr std::uint64_t kValuesSalt = 0x76616C7565736565ULL;

std::vector<NodeDef> numbered_nodes(int n) {
    std::vector<NodeDef> nodes;
    nodes.reserve(n);
    for (int i = 1; i <= n; ++i) nodes.push_back({i, 2});
    return nodes;
}

std::vector<int> draw_values(int count, const ValuesAssignment& va, std::uint64_t seed) {
    std::vector<int> out(count, 2);
    if (va.kind == ValuesAssignment::Kind::uniform_range) {
        if (va.lo < 2) throw validation_error("values lower bound must be >= 2");
        if (va.lo > va.hi) throw validation_error("values range is empty");
        rng::Engine eng(seed);
        for (int& v : out)
            v = va.lo + static_cast<int>(rng::uniform_below(
                            eng, static_cast<std::uint64_t>(va.hi - va.lo + 1)));
    }
    return out;
}

}  // namespace

void GenSpec::validate() const {
    switch (kind) {
        case Kind::G1:
            if (n < 0) throw validation_error("G1 requires n >= 0");
            if (p < 0.0 || p > 1.0) throw validation_error("G1 requires 0 <= p <= 1");
            break;
        case Kind::G2: {
            if (n < 0) throw validation_error("G2 requires n >= 0");
            const long long max_arcs = static_cast<long long>(n) * (n - 1) / 2;
            if (m < 0 || m > max_arcs)
                throw validation_error("G2 requires 0 <= m <= n(n-1)/2");
            if (keep_connected && m < n - 1)
                throw validation_error("G2 keep-connected requires m >= n-1");
            break;
        }
        case Kind::ADV:
            if (k < 2) throw validation_error("ADV requires k >= 2");
            break;
    }
    if (values.kind == ValuesAssignment::Kind::uniform_range) {
        if (values.lo < 2) throw validation_error("values lower bound must be >= 2");
        if (values.lo > values.hi) throw validation_error("values range is empty");
    }
}

std::string GenSpec::row_key() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::G1:
            os << "G1(n=" << n << ",p=" << p << ")";
            break;
        case Kind::G2:
            os << "G2(n=" << n << ",m=" << m << (keep_connected ? ",connected" : "") << ")";
            break;
        case Kind::ADV:
            os << "ADV(k=" << k << ")";
            break;
    }
    return os.str();
}

nlohmann::ordered_json GenSpec::to_json() const {
    nlohmann::ordered_json j;
    switch (kind) {
        case Kind::G1:
            j["kind"] = "g1";
            j["n"] = n;
            j["p"] = p;
            break;
        case Kind::G2:
            j["kind"] = "g2";
            j["n"] = n;
            j["m"] = m;
            j["keep_connected"] = keep_connected;
            break;
        case Kind::ADV:
            j["kind"] = "adv";
            j["k"] = k;
            break;
    }
    if (values.kind == ValuesAssignment::Kind::all_two) {
        j["values"] = "all2";
    } else {
        j["values"] = "uniform";
        j["values_lo"] = values.lo;
        j["values_hi"] = values.hi;
    }
    j["seed"] = seed;
    return j;
}

GenSpec GenSpec::from_json(const nlohmann::json& j) {
    GenSpec spec;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "g1") {
        spec.kind = Kind::G1;
        spec.n = j.at("n").get<int>();
        spec.p = j.at("p").get<double>();
    } else if (kind == "g2") {
        spec.kind = Kind::G2;
        spec.n = j.at("n").get<int>();
        spec.m = j.at("m").get<int>();
        spec.keep_connected = j.value("keep_connected", false);
    } else if (kind == "adv") {
        spec.kind = Kind::ADV;
        spec.k = j.at("k").get<int>();
    } else {
        throw parse_error("unknown generator kind: " + kind);
    }
    const std::string values = j.value("values", "all2");
    if (values == "all2") {
        spec.values = ValuesAssignment::all2();
    } else if (values == "uniform") {
        spec.values = ValuesAssignment::uniform(j.at("values_lo").get<int>(),
                                                j.at("values_hi").get<int>());
    } else {
        throw parse_error("unknown values assignment: " + values);
    }
    spec.seed = j.value("seed", std::uint64_t{0});
    spec.validate();
    return spec;
}

Network gen_g1(int n, double p, const ValuesAssignment& va, std::uint64_t seed) {
    GenSpec check;
    check.kind = GenSpec::Kind::G1;
    check.n = n;
    check.p = p;
    check.values = va;
    check.validate();

    rng::Engine eng(seed);
    std::vector<Arc> arcs;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (rng::unit_double(eng) < p) arcs.emplace_back(i, j);

    auto nodes = numbered_nodes(n);
    auto vals = draw_values(n, va, rng::mix64(seed ^ kValuesSalt));
    for (int i = 0; i < n; ++i) nodes[i].values = vals[i];
    return Network(std::move(nodes), std::move(arcs));
}

Network gen_g2(int n, int m, bool keep_connected, const ValuesAssignment& va,
               std::uint64_t seed) {
    GenSpec check;
    check.kind = GenSpec::Kind::G2;
    check.n = n;
    check.m = m;
    check.keep_connected = keep_connected;
    check.values = va;
    check.validate();

    std::vector<Arc> arcs;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) arcs.emplace_back(i, j);

    rng::Engine eng(seed);
    auto nodes = numbered_nodes(n);
    while (static_cast<int>(arcs.size()) > m) {
        // Deleting an arc disconnects the (connected) underlying graph iff it
        // is a bridge, so one bridge pass serves every draw of the round.
        std::vector<bool> bridge;
        if (keep_connected) {
            UndirectedView g;
            g.vertex_count = n;
            g.adj.assign(n, {});
            for (std::size_t e = 0; e < arcs.size(); ++e) {
                g.adj[arcs[e].first - 1].emplace_back(arcs[e].second - 1, static_cast<int>(e));
                g.adj[arcs[e].second - 1].emplace_back(arcs[e].first - 1, static_cast<int>(e));
            }
            bridge = bridge_edges(g);
        }
        std::vector<std::size_t> pool(arcs.size());
        std::iota(pool.begin(), pool.end(), 0);
        bool deleted = false;
        while (!pool.empty()) {
            std::size_t at = rng::uniform_below(eng, pool.size());
            std::size_t idx = pool[at];
            if (!keep_connected || !bridge[idx]) {
                arcs.erase(arcs.begin() + static_cast<std::ptrdiff_t>(idx));
                deleted = true;
                break;
            }
            pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(at));
        }
        if (!deleted)
            throw validation_error("cannot reach m arcs while keeping the graph connected");
    }

    auto vals = draw_values(n, va, rng::mix64(seed ^ kValuesSalt));
    for (int i = 0; i < n; ++i) nodes[i].values = vals[i];
    return Network(std::move(nodes), std::move(arcs));
}

Network gen_adv(int k) {
    if (k < 2) throw validation_error("ADV requires k >= 2");
    const int chain_len = 4 * k + 1;
    const int hub = 4 * k + 2;
    const int guard_a = 4 * k + 3, guard_b = 4 * k + 4, guard_c = 4 * k + 5;

    std::vector<Arc> arcs;
    // Per segment i: a W of arcs around the mid node; boundaries are the
    // local sinks shared with the neighbouring segments.
    for (int i = 0; i < k; ++i) {
        const int base = 4 * i;
        const int mid = base + 3;
        arcs.emplace_back(mid, base + 2);
        arcs.emplace_back(base + 2, base + 1);
        arcs.emplace_back(mid, base + 4);
        arcs.emplace_back(base + 4, base + 5);
    }
    // Hub arcs to every mid and every segment boundary. The boundary arcs
    // give boundaries degree >= 3, so cutting one segment never cascades into
    // the next; every undirected cycle passes through the hub.
    for (int i = 0; i < k; ++i) arcs.emplace_back(hub, 4 * i + 3);
    for (int i = 0; i <= k; ++i) arcs.emplace_back(hub, 4 * i + 1);
    // Guard gadget: makes the hub head-to-head on one loop, so neither
    // heuristic may pick it until the gadget is spent.
    arcs.emplace_back(guard_a, guard_b);
    arcs.emplace_back(guard_a, guard_c);
    arcs.emplace_back(guard_b, hub);
    arcs.emplace_back(guard_c, hub);

    return Network(numbered_nodes(chain_len + 4), std::move(arcs));
}

AdvLabels adv_labels(int k) {
    AdvLabels labels;
    labels.hub = 4 * k + 2;
    labels.guard_a = 4 * k + 3;
    labels.guard_b = 4 * k + 4;
    labels.guard_c = 4 * k + 5;
    for (int i = 0; i < k; ++i) labels.mids.push_back(4 * i + 3);
    return labels;
}

Network assign_values(const Network& net, const ValuesAssignment& va, std::uint64_t seed) {
    auto vals = draw_values(static_cast<int>(net.node_count()), va, seed);
    std::vector<NodeDef> nodes = net.nodes();
    for (std::size_t i = 0; i < nodes.size(); ++i) nodes[i].values = vals[i];
    return Network(std::move(nodes), net.arcs());
}

Network generate(const GenSpec& spec) {
    spec.validate();
    switch (spec.kind) {
        case GenSpec::Kind::G1: return gen_g1(spec.n, spec.p, spec.values, spec.seed);
        case GenSpec::Kind::G2:
            return gen_g2(spec.n, spec.m, spec.keep_connected, spec.values, spec.seed);
        case GenSpec::Kind::ADV: return gen_adv(spec.k);
    }
    throw std::logic_error("unreachable generator kind");
}

}  // namespace loopcut
