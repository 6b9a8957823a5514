#pragma once

#include "linkage_lab/arith.hpp"
#include "linkage_lab/coords.hpp"
#include "linkage_lab/root_datum.hpp"
#include "linkage_lab/lattice.hpp"
#include "linkage_lab/weyl.hpp"
#include "linkage_lab/affine.hpp"
#include "linkage_lab/characters.hpp"
#include "linkage_lab/translation.hpp"
#include "linkage_lab/quantum.hpp"
#include "linkage_lab/verify.hpp"
