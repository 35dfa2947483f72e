//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "pestgraph/csv.h"
#include "pestgraph/embeddings.h"
#include "test_util.h"

namespace pestgraph {
namespace {

const std::vector<std::string> kIds = { "m1", "m2", "m3" };
const std::vector<int> kLabels = { 1, 0, 1 };

TEST(Embeddings, WellFormedFile) {
  const auto j = join_embeddings("id,e0,e1\nm1,0.5,1\nm2,-2,3e-1\nm3,0,0\n", kIds, kLabels);
  EXPECT_TRUE(j.missing.empty());
  ASSERT_EQ(j.data.size(), 3u);
  ASSERT_EQ(j.data.dim(), 2u);
  EXPECT_EQ(j.data.X(1, 1), 0.3);
  EXPECT_EQ(j.data.y, kLabels);
  EXPECT_EQ(j.data.ids, kIds);
}

TEST(Embeddings, ShortRowNamesTheRow) {
  try {
    join_embeddings("id,e0,e1\nm1,0.5,1\nm2,7\nm3,0,0\n", kIds, kLabels, "emb.csv");
    FAIL() << "expected an error";
  } catch (const EmbeddingError &e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("m2"), std::string::npos) << msg;
    EXPECT_NE(msg.find("emb.csv"), std::string::npos) << msg;
  }
}

TEST(Embeddings, RowOrderDoesNotMatter) {
  const auto a = join_embeddings("id,x,y\nm1,1,2\nm2,3,4\nm3,5,6\n", kIds, kLabels);
  const auto b = join_embeddings("id,x,y\nm3,5,6\nm1,1,2\nm2,3,4\n", kIds, kLabels);
  EXPECT_EQ(a.data.X, b.data.X);
  EXPECT_EQ(a.data.ids, b.data.ids);
}

TEST(Embeddings, MissingDuplicateAndUnknownIds) {
  const auto j = join_embeddings("id,x\nm1,1\nm3,2\n", kIds, kLabels);
  EXPECT_EQ(j.missing, (std::vector<std::string> { "m2" }));
  EXPECT_THROW(join_embeddings("id,x\nm1,1\nm1,2\n", kIds, kLabels), EmbeddingError);
  EXPECT_THROW(join_embeddings("id,x\nzz,1\n", kIds, kLabels), EmbeddingError);
  EXPECT_THROW(join_embeddings("id,x\nm1,abc\n", kIds, kLabels), EmbeddingError);
  EXPECT_THROW(join_embeddings("name,x\nm1,1\n", kIds, kLabels), EmbeddingError);
}

TEST(Embeddings, FileRoundTrip) {
  testing::TempDir dir("emb");
  std::string text = "id,e0,e1,e2\n";
  for (std::size_t i = 0; i < kIds.size(); ++i)
    text += kIds[i] + "," + std::to_string(i) + ",0.25,-1\n";
  write_text_file(dir / "emb.csv", text);
  const auto j = load_embeddings(dir / "emb.csv", kIds, kLabels);
  EXPECT_EQ(j.data.dim(), 3u);
  EXPECT_EQ(j.data.X(2, 0), 2.0);
}

}  // namespace
}  // namespace pestgraph
