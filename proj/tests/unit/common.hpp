// Copyright 2026 The paoi-cf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "paoi/params.hpp"

#ifndef PAOI_TABLE1
#define PAOI_TABLE1 "configs/table1.json"
#endif

namespace paoi::test {

inline nlohmann::json table1_doc()
{
    std::ifstream in(PAOI_TABLE1);
    return nlohmann::json::parse(in);
}

inline SystemParameters table1() { return from_config(table1_doc()); }

}  // namespace paoi::test
