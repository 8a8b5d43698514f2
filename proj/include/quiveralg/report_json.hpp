#pragma once

// JSON schema for suite reports, shared by the CLI and the tests.

#include "quiveralg/suites.hpp"

#include <json.hpp>

#include <stdexcept>

namespace quiveralg {

template <class Json>
void to_json(Json& j, const CheckItem& i) {
    j = Json{{"name", i.name}, {"criterion", i.criterion}, {"passed", i.passed}, {"detail", i.detail}};
}

template <class Json>
void from_json(const Json& j, CheckItem& i) {
    j.at("name").get_to(i.name);
    j.at("criterion").get_to(i.criterion);
    j.at("passed").get_to(i.passed);
    j.at("detail").get_to(i.detail);
}

template <class Json>
void to_json(Json& j, const SuiteReport& r) {
    j = Json{{"suite", r.suite}, {"seed", r.seed}, {"passed", r.passed()}, {"items", r.items}};
}

template <class Json>
void from_json(const Json& j, SuiteReport& r) {
    j.at("suite").get_to(r.suite);
    j.at("seed").get_to(r.seed);
    j.at("items").get_to(r.items);
    if (j.at("passed").template get<bool>() != r.passed()) {
        throw std::runtime_error("suite report has an inconsistent 'passed' flag");
    }
}

}  // namespace quiveralg
