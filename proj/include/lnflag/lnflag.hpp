#pragma once

#include "lnflag/bigint.hpp"
#include "lnflag/exponent_seq.hpp"
#include "lnflag/flag_ring.hpp"
#include "lnflag/geometric.hpp"
#include "lnflag/gpoly.hpp"
#include "lnflag/hopf.hpp"
#include "lnflag/io.hpp"
#include "lnflag/series.hpp"
#include "lnflag/subset.hpp"
#include "lnflag/symmetric.hpp"
#include "lnflag/twist.hpp"
#include "lnflag/verify.hpp"
