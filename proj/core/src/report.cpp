// Copyright (c) the spheremetric project authors.
// SPDX-License-Identifier: Apache-2.0
#include "spheremetric/report.hpp"

#include <sstream>

#include <json.hpp>

#include "spheremetric/errors.hpp"

namespace spheremetric {

using nlohmann::json;

namespace {

json config_to_json_obj(const RunConfig& c) {
    json j;
    j["command"] = c.command;
    j["ref"] = c.ref_dir;
    j["eval"] = c.eval_dir;
    j["in"] = c.in_dir;
    j["out"] = c.out_dir;
    j["extractor"] = c.extractor;
    j["model_path"] = c.model_path;
    j["face_size"] = c.face_size;
    j["ds_kernel"] = c.ds_kernel;
    j["ds_c"] = c.ds_c;
    j["corrupt_op"] = c.corrupt_op;
    j["levels"] = c.levels;
    j["seed"] = c.seed;
    j["jobs"] = c.jobs;
    j["format"] = c.format;
    j["strict_aspect"] = c.strict_aspect;
    j["resize_width"] = c.resize_width;
    j["resize_height"] = c.resize_height;
    j["bias_warn_floor"] = c.bias_warn_floor;
    j["cache_path"] = c.cache_path;
    return j;
}

RunConfig config_from_json_obj(const json& j) {
    RunConfig c;
    c.command = j.value("command", "");
    c.ref_dir = j.value("ref", "");
    c.eval_dir = j.value("eval", "");
    c.in_dir = j.value("in", "");
    c.out_dir = j.value("out", "");
    c.extractor = j.value("extractor", "mock");
    c.model_path = j.value("model_path", "");
    c.face_size = j.value("face_size", 0);
    c.ds_kernel = j.value("ds_kernel", "scharr-second-order");
    c.ds_c = j.value("ds_c", 0.1);
    c.corrupt_op = j.value("corrupt_op", "");
    c.levels = j.value("levels", std::vector<double>{});
    c.seed = j.value("seed", std::uint64_t{0});
    c.jobs = j.value("jobs", 1);
    c.format = j.value("format", "json");
    c.strict_aspect = j.value("strict_aspect", true);
    c.resize_width = j.value("resize_width", 0);
    c.resize_height = j.value("resize_height", 0);
    c.bias_warn_floor = j.value("bias_warn_floor", kDefaultBiasWarnFloor);
    c.cache_path = j.value("cache_path", "");
    return c;
}

} // namespace

std::string RunConfig::to_json() const {
    return config_to_json_obj(*this).dump(2);
}

RunConfig RunConfig::from_json(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw InvalidInputError(std::string("config is not valid JSON: ") + e.what());
    }
    // accept either a bare config or a full report with an embedded config
    if (j.contains("config") && j["config"].is_object())
        j = j["config"];
    return config_from_json_obj(j);
}

std::string MetricReport::to_json() const {
    json j;
    j["schema_version"] = kReportSchemaVersion;
    j["tool_version"] = kToolVersion;
    j["config"] = config_to_json_obj(config);

    json results;
    if (fid)
        results["fid"] = *fid;
    if (omnifid) {
        results["fid_bar"] = {{"frontal", omnifid->fid_bar_frontal},
                              {"up", omnifid->fid_bar_up},
                              {"down", omnifid->fid_bar_down}};
        results["omnifid"] = omnifid->omnifid;
    }
    if (ds) {
        json d;
        d["mean"] = ds->mean;
        d["q1"] = ds->q1;
        d["median"] = ds->median;
        d["q3"] = ds->q3;
        json ex = json::array();
        for (const auto& e : ds->percentile_exemplars)
            ex.push_back({{"percentile", e.percentile}, {"id", e.id}, {"ds", e.score}});
        d["percentile_exemplars"] = ex;
        results["ds"] = d;
    }
    if (n_ref > 0)
        results["n_ref"] = n_ref;
    if (n_eval > 0)
        results["n_eval"] = n_eval;
    j["results"] = results;
    j["warnings"] = warnings;
    j["timing"] = {{"total_seconds", total_seconds}};
    return j.dump(2) + "\n";
}

namespace {

std::string num(double v) {
    // shortest round-trip form, matching the JSON serializer
    return json(v).dump();
}

} // namespace

std::string MetricReport::to_csv() const {
    std::ostringstream os;
    os << "metric,value\n";
    if (fid)
        os << "fid," << num(*fid) << "\n";
    if (omnifid) {
        os << "fid_bar_frontal," << num(omnifid->fid_bar_frontal) << "\n";
        os << "fid_bar_up," << num(omnifid->fid_bar_up) << "\n";
        os << "fid_bar_down," << num(omnifid->fid_bar_down) << "\n";
        os << "omnifid," << num(omnifid->omnifid) << "\n";
    }
    if (ds) {
        os << "ds_mean," << num(ds->mean) << "\n";
        os << "ds_q1," << num(ds->q1) << "\n";
        os << "ds_median," << num(ds->median) << "\n";
        os << "ds_q3," << num(ds->q3) << "\n";
    }
    return os.str();
}

std::string MetricReport::ds_rows_csv() const {
    std::ostringstream os;
    os << "path,ds\n";
    for (const DsRow& row : ds_rows)
        os << row.id << "," << num(row.score) << "\n";
    return os.str();
}

} // namespace spheremetric
