/// Umbrella header.
#pragma once

#include "chikit/cone/cone_transforms.hpp"
#include "chikit/exact/linalg.hpp"
#include "chikit/exact/ratfunc.hpp"
#include "chikit/forms/theta.hpp"
#include "chikit/hopf/character.hpp"
#include "chikit/report.hpp"
#include "chikit/shuffle/ez.hpp"
#include "chikit/total/bigraded.hpp"
#include "chikit/total/constants.hpp"
#include "chikit/total/e1_page.hpp"
#include "chikit/total/free_dga.hpp"
#include "chikit/total/free_model.hpp"
