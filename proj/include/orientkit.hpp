#pragma once

#include "orientkit/error.hpp"
#include "orientkit/graph.hpp"
#include "orientkit/orientation.hpp"
#include "orientkit/io.hpp"
#include "orientkit/recognizers.hpp"
#include "orientkit/extend.hpp"
#include "orientkit/exact.hpp"
#include "orientkit/constructors.hpp"
#include "orientkit/instances.hpp"
