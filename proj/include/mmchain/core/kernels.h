// mmchain/core/kernels.h

// Copyright 2026  mmchain authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>

// Dense kernels backing the tensor engine. Every kernel exists twice: a
// serial reference under kernels::serial and an OpenMP version under
// kernels::parallel. Both compute bit-identical results: each output element
// is produced by one serial inner loop, and full reductions sum fixed-size
// block partials in block order, so the result does not depend on the thread
// count. The dispatch functions at namespace scope pick the parallel path for
// calls above a size threshold when parallel mode is on.

namespace mmchain {
namespace kernels {

enum class Mode { kSerial, kParallel };

void SetMode(Mode mode);
Mode GetMode();
int MaxThreads();

// Block length for reductions. Partial sums are taken over consecutive
// blocks of this many elements, then combined in block order.
constexpr std::int64_t kReduceBlock = 4096;

namespace serial {

// C(m,n) = A(m,k) * B(k,n)
void GemmNN(int m, int n, int k, const double *a, const double *b, double *c);
// C(m,n) = A(k,m)^T * B(k,n)
void GemmTN(int m, int n, int k, const double *a, const double *b, double *c);
// C(m,n) = A(m,k) * B(n,k)^T
void GemmNT(int m, int n, int k, const double *a, const double *b, double *c);

void Add(std::int64_t n, const double *a, const double *b, double *y);
void Sub(std::int64_t n, const double *a, const double *b, double *y);
void Mul(std::int64_t n, const double *a, const double *b, double *y);
void Scale(std::int64_t n, double alpha, const double *x, double *y);
// y += alpha * x
void Axpy(std::int64_t n, double alpha, const double *x, double *y);
// y += alpha * a ⊙ b
void AddMul(std::int64_t n, double alpha, const double *a, const double *b, double *y);

void Tanh(std::int64_t n, const double *x, double *y);
void Sigmoid(std::int64_t n, const double *x, double *y);
void Log(std::int64_t n, const double *x, double *y);

// Row-wise softmax / log-softmax of an (rows x cols) matrix.
void SoftmaxRows(int rows, int cols, const double *x, double *y);
void LogSoftmaxRows(int rows, int cols, const double *x, double *y);

// y(r,c) = m(r,c) + v(c)
void AddRowBroadcast(int rows, int cols, const double *m, const double *v, double *y);
// y(c) += sum over rows of m(r,c)
void ColSumAcc(int rows, int cols, const double *m, double *y);

double Sum(std::int64_t n, const double *x);
double Dot(std::int64_t n, const double *a, const double *b);
double SquaredDistance(std::int64_t n, const double *a, const double *b);

}  // namespace serial

namespace parallel {

void GemmNN(int m, int n, int k, const double *a, const double *b, double *c);
void GemmTN(int m, int n, int k, const double *a, const double *b, double *c);
void GemmNT(int m, int n, int k, const double *a, const double *b, double *c);

void Add(std::int64_t n, const double *a, const double *b, double *y);
void Sub(std::int64_t n, const double *a, const double *b, double *y);
void Mul(std::int64_t n, const double *a, const double *b, double *y);
void Scale(std::int64_t n, double alpha, const double *x, double *y);
void Axpy(std::int64_t n, double alpha, const double *x, double *y);
void AddMul(std::int64_t n, double alpha, const double *a, const double *b, double *y);

void Tanh(std::int64_t n, const double *x, double *y);
void Sigmoid(std::int64_t n, const double *x, double *y);
void Log(std::int64_t n, const double *x, double *y);

void SoftmaxRows(int rows, int cols, const double *x, double *y);
void LogSoftmaxRows(int rows, int cols, const double *x, double *y);

void AddRowBroadcast(int rows, int cols, const double *m, const double *v, double *y);
void ColSumAcc(int rows, int cols, const double *m, double *y);

double Sum(std::int64_t n, const double *x);
double Dot(std::int64_t n, const double *a, const double *b);
double SquaredDistance(std::int64_t n, const double *a, const double *b);

}  // namespace parallel

// Dispatch: parallel path when mode is kParallel and the work is large
// enough to amortize the fork.
void GemmNN(int m, int n, int k, const double *a, const double *b, double *c);
void GemmTN(int m, int n, int k, const double *a, const double *b, double *c);
void GemmNT(int m, int n, int k, const double *a, const double *b, double *c);
void Add(std::int64_t n, const double *a, const double *b, double *y);
void Sub(std::int64_t n, const double *a, const double *b, double *y);
void Mul(std::int64_t n, const double *a, const double *b, double *y);
void Scale(std::int64_t n, double alpha, const double *x, double *y);
void Axpy(std::int64_t n, double alpha, const double *x, double *y);
void AddMul(std::int64_t n, double alpha, const double *a, const double *b, double *y);
void Tanh(std::int64_t n, const double *x, double *y);
void Sigmoid(std::int64_t n, const double *x, double *y);
void Log(std::int64_t n, const double *x, double *y);
void SoftmaxRows(int rows, int cols, const double *x, double *y);
void LogSoftmaxRows(int rows, int cols, const double *x, double *y);
void AddRowBroadcast(int rows, int cols, const double *m, const double *v, double *y);
void ColSumAcc(int rows, int cols, const double *m, double *y);
double Sum(std::int64_t n, const double *x);
double Dot(std::int64_t n, const double *a, const double *b);
double SquaredDistance(std::int64_t n, const double *a, const double *b);

}  // namespace kernels
}  // namespace mmchain
