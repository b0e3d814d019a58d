#pragma once

// Umbrella header for the exact library. The JSON/CSV report layer lives in
// liechains/report.hpp and additionally needs nlohmann/json.

#include "liechains/rational.hpp"
#include "liechains/matrix.hpp"
#include "liechains/linalg.hpp"
#include "liechains/so_contact.hpp"
#include "liechains/split_quat.hpp"
#include "liechains/path_sl.hpp"
#include "liechains/sampling.hpp"
#include "liechains/extension.hpp"
#include "liechains/chains.hpp"
#include "liechains/checks.hpp"
