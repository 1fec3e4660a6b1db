#pragma once

#include "polytrig/arclength.hpp"
#include "polytrig/enclosure.hpp"
#include "polytrig/errors.hpp"
#include "polytrig/geom_core.hpp"
#include "polytrig/inverse_trig.hpp"
#include "polytrig/partitions.hpp"
#include "polytrig/report.hpp"
#include "polytrig/sector_area.hpp"
