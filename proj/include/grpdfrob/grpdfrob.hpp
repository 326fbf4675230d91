// Umbrella header.
#pragma once

#include "grpdfrob/correspondence.hpp"
#include "grpdfrob/error.hpp"
#include "grpdfrob/fixtures.hpp"
#include "grpdfrob/frobenius.hpp"
#include "grpdfrob/gfa.hpp"
#include "grpdfrob/groupoid.hpp"
#include "grpdfrob/linalg.hpp"
#include "grpdfrob/parallel.hpp"
#include "grpdfrob/rational.hpp"
#include "grpdfrob/rep_cat.hpp"
#include "grpdfrob/report.hpp"
#include "grpdfrob/serialize.hpp"
#include "grpdfrob/weak_hopf.hpp"
