#pragma once

#include "dolphin/common.hpp"
#include "dolphin/energetics.hpp"
#include "dolphin/explorer.hpp"
#include "dolphin/export.hpp"
#include "dolphin/hydro.hpp"
#include "dolphin/json_io.hpp"
#include "dolphin/profile.hpp"
#include "dolphin/reference.hpp"
#include "dolphin/report.hpp"
#include "dolphin/skeleton.hpp"
#include "dolphin/tendon.hpp"
