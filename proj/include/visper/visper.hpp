#pragma once

#include "visper/experiment.hpp"
#include "visper/generators.hpp"
#include "visper/geometry.hpp"
#include "visper/io.hpp"
#include "visper/oracle.hpp"
#include "visper/orders.hpp"
#include "visper/svg.hpp"
#include "visper/visibility.hpp"
