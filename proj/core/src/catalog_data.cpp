// Copyright 2026 The cage5 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.



// Literal tables shipped with the catalog. Each text is identical to the
// corresponding file under catalog/ and is guarded by an FNV-1a checksum.

#include "catalog_data.hpp"

namespace cage5::data {

const char* const relabel_q31_perm = R"cage5(# relabelling for q=31: G0 label -> G1 label
0 0
1 28
2 1
3 27
4 2
5 19
6 4
7 7
8 5
9 22
10 6
11 3
12 8
13 24
14 9
15 20
16 10
17 15
18 12
19 23
20 13
21 11
22 14
23 29
24 16
25 21
26 17
27 25
28 18
29 26
)cage5";

const char* const relabel_q41_perm = R"cage5(# relabelling for q=41: G0 label -> G1 label
0 0
1 12
2 1
3 20
4 2
5 33
6 3
7 37
8 7
9 38
10 8
11 18
12 9
13 32
14 10
15 25
16 14
17 5
18 15
19 13
20 16
21 36
22 17
23 27
24 21
25 19
26 22
27 11
28 23
29 35
30 24
31 39
32 28
33 26
34 29
35 4
36 30
37 34
38 31
39 6
)cage5";

const char* const relabel_q49_perm = R"cage5(# relabelling for q=49: G0 label -> G1 label
0 0
1 42
2 1
3 39
4 2
5 23
6 3
7 47
8 6
9 4
10 7
11 28
12 8
13 34
14 9
15 43
16 12
17 35
18 13
19 36
20 14
21 29
22 15
23 44
24 18
25 37
26 19
27 5
28 20
29 40
30 21
31 10
32 24
33 45
34 25
35 46
36 26
37 38
38 27
39 16
40 30
41 41
42 31
43 17
44 32
45 11
46 33
47 22
)cage5";

const char* const relabel_q64_perm = R"cage5(# relabelling for q=64: G0 label -> G1 label
0 0
1 44
2 2
3 39
4 5
5 41
6 7
7 19
8 12
9 50
10 14
11 28
12 1
13 52
14 3
15 21
16 4
17 25
18 6
19 22
20 57
21 20
22 59
23 31
24 24
25 45
26 26
27 56
28 61
29 48
30 63
31 29
32 32
33 10
34 34
35 8
36 49
37 23
38 51
39 27
40 36
41 62
42 38
43 54
44 9
45 35
46 11
47 43
48 40
49 46
50 42
51 30
52 53
53 33
54 55
55 17
56 16
57 58
58 18
59 60
60 13
61 47
62 15
63 37
)cage5";

const char* const q32_adj = R"cage5(# q=32 G0 adjacency list: vertex, then its five neighbours (bits, most significant first)
00000 10000 11010 11100 00001 11111
00001 00000 10001 11011 11101 11110
10000 00000 01011 01101 01110 11001
10001 00001 01010 01100 01111 11000
01000 01001 10010 10101 10110 11000
01001 01000 10011 10100 10111 11001
11000 00011 00100 00111 01000 10001
11001 00010 00101 00110 01001 10000
00100 00101 10100 11000 11010 11110
00101 00100 10101 11001 11011 11111
10100 00100 01001 01011 01111 11101
10101 00101 01000 01010 01110 11100
01100 01101 10001 10011 10110 11100
01101 01100 10000 10010 10111 11101
11100 00000 00010 00111 01100 10101
11101 00001 00011 00110 01101 10100
00010 00011 10010 11001 11100 11110
00011 00010 10011 11000 11101 11111
10010 00010 01000 01101 01111 11011
10011 00011 01001 01100 01110 11010
01010 01011 10001 10101 10111 11010
01011 01010 10000 10100 10110 11011
11010 00000 00100 00110 01010 10011
11011 00001 00101 00111 01011 10010
00110 00111 10110 11001 11010 11101
00111 00110 10111 11000 11011 11100
10110 00110 01000 01011 01100 11111
10111 00111 01001 01010 01101 11110
01110 01111 10000 10011 10101 11110
01111 01110 10001 10010 10100 11111
11110 00001 00010 00100 01110 10111
11111 00000 00011 00101 01111 10110
)cage5";

const char* const relabel_q32_perm = R"cage5(# relabelling for q=32: G0 label -> G1 label (bits, most significant first)
00000 00000
00001 00011
00010 00010
00011 00001
00100 00100
00101 00111
00110 00110
00111 01110
01000 11001
01001 11100
01010 11111
01011 11011
01100 10011
01101 11101
01110 11010
01111 11110
10000 01111
10001 10100
10010 01100
10011 10000
10100 01000
10101 10001
10110 01010
10111 11000
11000 10110
11001 01101
11010 10101
11011 01001
11100 00101
11101 01011
11110 10111
11111 10010
)cage5";

const char* const records_csv = R"cage5(k,order,route
17,436,C q=16 quad=construction1 d=2
18,468,C q=16 quad=construction1 d=1
19,500,C q=16 quad=construction1 d=0
20,564,C q=17 quad=construction1 d=0
21,666,C q=19 quad=construction1 d=1
22,704,C q=19 quad=construction1 d=0
32,1624,L q=29 pair=construction2 d=1
33,1680,L q=29 pair=construction2 d=0
34,1800,L q=31 pair=construction2 d=2
35,1860,L q=31 pair=construction2 d=1
36,1920,L q=31 pair=construction2 d=0
37,2048,C q=32 pair=q32 d=0
38,2448,L q=37 pair=construction2 d=4
39,2520,L q=37 pair=construction2 d=3
40,2592,L q=37 pair=construction2 d=2
41,2664,L q=37 pair=construction2 d=1
42,2736,L q=37 pair=construction2 d=0
43,3040,L q=41 pair=construction2 d=4
44,3120,L q=41 pair=construction2 d=3
45,3200,L q=41 pair=construction2 d=2
46,3280,L q=41 pair=construction2 d=1
47,3360,L q=41 pair=construction2 d=0
48,3696,L q=43 pair=construction2 d=0
49,4140,L q=47 pair=construction2 d=3
50,4232,L q=47 pair=construction2 d=2
51,4324,L q=47 pair=construction2 d=1
52,4416,L q=47 pair=construction2 d=0
55,4800,L q=49 pair=q49 d=0
70,8192,C q=64 pair=thm12 d=0
)cage5";

const EmbeddedText kTexts[] = {
    {"relabel-q31.perm", relabel_q31_perm, 0xdab89d4daefae312ULL},
    {"relabel-q41.perm", relabel_q41_perm, 0x5e950be4e1595b8fULL},
    {"relabel-q49.perm", relabel_q49_perm, 0x587d0570ee7c9e8bULL},
    {"relabel-q64.perm", relabel_q64_perm, 0x27f25bacfdf5ea46ULL},
    {"q32.adj", q32_adj, 0x50b1d8a32a080e2eULL},
    {"relabel-q32.perm", relabel_q32_perm, 0xfe73dbbf027b28aaULL},
    {"records.csv", records_csv, 0xd1db404422797904ULL},
};

std::span<const EmbeddedText> embedded_texts() { return kTexts; }

}  // namespace cage5::data
