#include "pma/io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <stdexcept>

namespace pma {

using nlohmann::json;

namespace {

json parse(std::istream& is) {
    json j;
    is >> j;
    return j;
}

std::ifstream open_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    return f;
}

Instance instance_from_json(const json& j) {
    return Instance(j.at("period").get<int>(), j.at("tau").get<int>(),
                    j.at("delays").get<std::vector<int>>());
}

json instance_to_json(const Instance& inst) {
    return json{{"period", inst.period}, {"tau", inst.msg_size}, {"delays", inst.delays}};
}

}  // namespace

Instance read_instance(std::istream& is) { return instance_from_json(parse(is)); }

Instance read_instance_file(const std::string& path) {
    auto f = open_file(path);
    return read_instance(f);
}

void write_instance(const Instance& inst, std::ostream& os) {
    os << instance_to_json(inst).dump() << "\n";
}

void write_assignment(const std::optional<Assignment>& a, bool proven_unsat, std::ostream& os) {
    if (a)
        os << json{{"offsets", a->offsets}}.dump() << "\n";
    else
        os << json(proven_unsat ? "UNSAT" : "UNKNOWN").dump() << "\n";
}

std::optional<Assignment> read_assignment(std::istream& is) {
    json j = parse(is);
    if (j.is_string()) return std::nullopt;
    return Assignment{j.at("offsets").get<std::vector<int>>()};
}

std::optional<Assignment> read_assignment_file(const std::string& path) {
    auto f = open_file(path);
    return read_assignment(f);
}

void write_record(const ReductionRecord& rec, std::ostream& os) {
    json j{{"kind", to_string(rec.kind)},
           {"original", instance_to_json(rec.original)},
           {"reduced", instance_to_json(rec.reduced)},
           {"added_latency", rec.added_latency},
           {"scale", rec.scale},
           {"unit_block_half", rec.unit_block_half},
           {"unit_shift", rec.unit_shift},
           {"buffered_delays", rec.buffered_delays},
           {"rescale", rec.rescale}};
    os << j.dump() << "\n";
}

ReductionRecord read_record(std::istream& is) {
    json j = parse(is);
    ReductionRecord rec;
    rec.kind = reduction_kind_from_string(j.at("kind").get<std::string>());
    rec.original = instance_from_json(j.at("original"));
    rec.reduced = instance_from_json(j.at("reduced"));
    rec.added_latency = j.at("added_latency").get<std::vector<int>>();
    rec.scale = j.at("scale").get<int>();
    rec.unit_block_half = j.at("unit_block_half").get<int>();
    rec.unit_shift = j.at("unit_shift").get<std::vector<int>>();
    rec.buffered_delays = j.at("buffered_delays").get<std::vector<int>>();
    rec.rescale = j.at("rescale").get<int>();
    return rec;
}

ReductionRecord read_record_file(const std::string& path) {
    auto f = open_file(path);
    return read_record(f);
}

ExperimentConfig read_config(std::istream& is) {
    json j = parse(is);
    ExperimentConfig c;
    c.period = j.at("period").get<int>();
    c.tau = j.at("tau").get<int>();
    if (j.contains("n_grid")) c.n_grid = j.at("n_grid").get<std::vector<int>>();
    if (j.contains("load_grid")) c.load_grid = j.at("load_grid").get<std::vector<double>>();
    if (j.contains("trials")) c.trials = j.at("trials").get<int>();
    if (j.contains("dist")) c.dist = dist_from_string(j.at("dist").get<std::string>());
    if (j.contains("seed")) c.master_seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("k")) c.compact_k = j.at("k").get<int>();
    if (j.contains("algos")) {
        for (const auto& name : j.at("algos")) {
            auto a = algo_from_string(name.get<std::string>());
            if (!a) throw std::invalid_argument("unknown algorithm: " + name.get<std::string>());
            c.algos.push_back(*a);
        }
    }
    if (c.algos.empty())
        throw std::invalid_argument("config: algos must be non-empty");
    if (c.n_grid.empty() && c.load_grid.empty())
        throw std::invalid_argument("config: need n_grid or load_grid");
    return c;
}

ExperimentConfig read_config_file(const std::string& path) {
    auto f = open_file(path);
    return read_config(f);
}

}  // namespace pma
