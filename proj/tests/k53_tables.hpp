#pragma once

// Printed entries of the K_{5,3} tables, as x/y/count triples.

// degree/rank/count, degrees -3..17 and ranks -1..9.
inline constexpr const char* kK53DegreeRank =
    "10/4/3,3/1/1,9/1/57,-3/-1/105,8/0/35,11/3/89,12/5/8,7/-1/15,6/2/1,5/1/9,1/-1/102,4/-1/75,7/2/6,"
    "4/0/27,11/5/1,8/1/49,10/3/27,0/0/1,3/0/15,-2/-1/105,4/1/3,5/-1/57,11/4/15,5/0/39,7/1/36,-1/-1/105,"
    "2/-1/97,6/0/49,14/6/104,13/6/3,8/3/1,15/7/105,1/0/3,8/2/20,9/3/9,7/0/48,17/9/105,9/2/39,6/1/20,"
    "16/8/105,14/7/1,13/5/102,3/-1/89,6/-1/35,2/0/8,12/4/97,0/-1/104,10/2/75";

// xpara/ypara/count, both in 0..10.
inline constexpr const char* kK53XY =
    "1/3/39,3/0/75,8/0/105,2/1/49,0/0/15,1/6/8,0/10/105,5/1/15,2/5/3,0/3/75,4/0/89,1/2/49,9/0/105,"
    "3/3/6,0/6/102,8/1/1,1/5/15,5/0/97,0/4/89,10/0/105,4/1/27,1/1/48,3/2/20,2/6/1,7/1/3,2/2/36,"
    "6/0/102,1/4/27,2/3/20,0/7/104,4/2/9,1/0/35,0/8/105,0/1/35,7/0/104,3/4/1,6/1/8,3/1/39,2/4/9,"
    "2/0/57,1/8/1,6/2/1,4/3/1,1/7/3,0/9/105,0/5/97,5/2/3,0/2/57";
