#pragma once

#include "tbsl/error.hpp"
#include "tbsl/rational.hpp"
#include "tbsl/slope.hpp"
#include "tbsl/contfrac.hpp"
#include "tbsl/twobridge.hpp"
#include "tbsl/monodromy.hpp"
#include "tbsl/surgery.hpp"
#include "tbsl/region.hpp"
#include "tbsl/family.hpp"
#include "tbsl/lspace.hpp"
#include "tbsl/foliation.hpp"
