#pragma once

#include "sflow/blow_up.hpp"
#include "sflow/circuits.hpp"
#include "sflow/contraction.hpp"
#include "sflow/cubic.hpp"
#include "sflow/eight_flow.hpp"
#include "sflow/errors.hpp"
#include "sflow/flow.hpp"
#include "sflow/generators.hpp"
#include "sflow/graph_algorithms.hpp"
#include "sflow/lemmas.hpp"
#include "sflow/search.hpp"
#include "sflow/signed_graph.hpp"
#include "sflow/suppress.hpp"
