#pragma once

#include "clift/case_studies.hpp"
#include "clift/dot.hpp"
#include "clift/errors.hpp"
#include "clift/gcd.hpp"
#include "clift/grading.hpp"
#include "clift/json_io.hpp"
#include "clift/laurent.hpp"
#include "clift/lifting.hpp"
#include "clift/membership.hpp"
#include "clift/parse.hpp"
#include "clift/rational.hpp"
#include "clift/seed.hpp"
