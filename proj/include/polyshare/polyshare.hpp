#pragma once

#include "polyshare/access.hpp"
#include "polyshare/classify.hpp"
#include "polyshare/compat.hpp"
#include "polyshare/core.hpp"
#include "polyshare/enumerate.hpp"
#include "polyshare/error.hpp"
#include "polyshare/gf.hpp"
#include "polyshare/hierarchy.hpp"
#include "polyshare/polymatroid.hpp"
#include "polyshare/represent.hpp"
#include "polyshare/scheme.hpp"
#include "polyshare/serialize.hpp"
