#pragma once

#include "softaura/error.hpp"
#include "softaura/soft_set.hpp"
#include "softaura/topology.hpp"
#include "softaura/space.hpp"
#include "softaura/operators.hpp"
#include "softaura/genopen.hpp"
#include "softaura/mapping.hpp"
#include "softaura/separation.hpp"
#include "softaura/rough.hpp"
#include "softaura/harness.hpp"
#include "softaura/io.hpp"
