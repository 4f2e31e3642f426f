#include <stddef.h>

/* 使用插入排序对数组进行升序排列，适合元素数量很少的情况。 */
void insertion_sort(int *a, size_t n) {
  for (size_t i = 1; i < n; ++i) {
    int x = a[i];
    size_t j = i;
    while (j > 0 && a[j - 1] > x) {  // 把比当前元素大的值向后移动一位。
      a[j] = a[j - 1];
      --j;
    }
    a[j] = x;
  }
}
