#pragma once

#include "irrlab/constructions.hpp"
#include "irrlab/error.hpp"
#include "irrlab/graph.hpp"
#include "irrlab/graph_io.hpp"
#include "irrlab/measures.hpp"
#include "irrlab/trees.hpp"
#include "irrlab/verify.hpp"
